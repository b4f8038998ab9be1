#pragma once

/**
 * @file eigen_support.hpp
 * @brief Eigen NumTraits for the GMP scalar types, plus the dense matrix
 *        aliases used throughout the project.
 */

#include <Eigen/Core>

#include "aztec/arith.hpp"

namespace Eigen {

template <>
struct NumTraits<aztec::Rat> : GenericNumTraits<aztec::Rat> {
    typedef aztec::Rat Real;
    typedef aztec::Rat NonInteger;
    typedef aztec::Rat Nested;

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

template <>
struct NumTraits<aztec::Int> : GenericNumTraits<aztec::Int> {
    typedef aztec::Int Real;
    typedef aztec::Int NonInteger;
    typedef aztec::Int Nested;

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

} // namespace Eigen

namespace aztec {

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

} // namespace aztec
