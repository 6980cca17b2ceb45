#pragma once

// The tabulated maps, written out by hand, so tests do not depend on the
// builders they are checking.

#include "ploi/plmap.hpp"

namespace fixture {

using ploi::PLMap;
using ploi::Rational;

inline PLMap alpha_table() {
    return ploi::make_plmap({{0, 0},
                             {Rational(1, 4), Rational(1, 16)},
                             {Rational(7, 16), Rational(1, 4)},
                             {Rational(9, 16), Rational(3, 4)},
                             {Rational(3, 4), Rational(15, 16)},
                             {1, 1}});
}

inline PLMap beta0_table() {
    return ploi::make_plmap({{0, 0},
                             {Rational(7, 16), Rational(7, 16)},
                             {Rational(15, 32), Rational(1, 2)},
                             {Rational(1, 2), Rational(17, 32)},
                             {Rational(9, 16), Rational(9, 16)},
                             {1, 1}});
}

inline PLMap beta1_table() {
    return ploi::make_plmap({{0, 0},
                             {Rational(1, 4), Rational(1, 4)},
                             {Rational(3, 8), Rational(1, 2)},
                             {Rational(1, 2), Rational(5, 8)},
                             {Rational(3, 4), Rational(3, 4)},
                             {1, 1}});
}

// beta_k by explicit conjugation, x -> x a^-k b0 a^k
inline PLMap beta_k(long k) {
    const PLMap a = alpha_table();
    return ploi::compose(ploi::compose(ploi::power(a, -k), beta0_table()), ploi::power(a, k));
}

}  // namespace fixture
