// operators.hpp — spin operator matrices in the |m> basis
#pragma once

#include <Eigen/Dense>

namespace spinbit {

// The three spin component matrices for total spin S, dimension 2S+1.
// Basis ordering is m = S, S-1, ..., -S (row/column 0 is m = S), so Sz is
// diagonal and Sx, Sy follow from the ladder operators.
struct SpinOperators {
    Eigen::MatrixXcd sx;
    Eigen::MatrixXcd sy;
    Eigen::MatrixXcd sz;
};

SpinOperators spin_operators(double spin);

}  // namespace spinbit
