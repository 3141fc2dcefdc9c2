#include "ordlab/fixtures.hpp"

namespace ordlab {
namespace fixtures {

namespace {
Rat r(long n, long d = 1) { return make_rat(n, d); }
} // namespace

PLHomeo crossed_f() {
    return PLHomeo({{r(0), r(0)},
                    {r(1, 8), r(1, 4)},
                    {r(1, 2), r(1, 2)},
                    {r(3, 4), r(7, 8)},
                    {r(1), r(1)}},
                   r(1), r(1));
}

PLHomeo crossed_g() {
    return PLHomeo({{r(0), r(0)}, {r(1, 4), r(1, 16)}, {r(1), r(1)}}, r(1), r(1));
}

PLHomeo search_alpha() { return compose(crossed_f(), crossed_g()); }

PLHomeo search_beta() { return compose(crossed_g(), crossed_f()); }

PLHomeo direct_g() {
    return PLHomeo({{r(0), r(0)},
                    {r(1, 6), r(1, 4)},
                    {r(1, 3), r(1, 3)},
                    {r(2, 3), r(7, 16)},
                    {r(1), r(1)}},
                   r(1), r(1));
}

PLHomeo conj_f() {
    return PLHomeo({{r(0), r(0)},
                    {r(1, 8), r(3, 16)},
                    {r(1, 4), r(1, 4)},
                    {r(7, 16), r(5, 16)},
                    {r(5, 8), r(5, 8)},
                    {r(3, 4), r(7, 8)},
                    {r(1), r(1)}},
                   r(1), r(1));
}

PLHomeo conj_g() {
    return PLHomeo({{r(0), r(0)},
                    {r(1, 4), r(3, 8)},
                    {r(3, 8), r(1, 2)},
                    {r(1, 2), r(11, 16)},
                    {r(1), r(1)}},
                   r(1), r(1));
}

PLHomeo steep_alpha() {
    Rat y = 1 - make_rat(1, Int(Int(1) << 43));
    return PLHomeo({{r(0), r(0)}, {r(7, 8), y}, {r(1), r(1)}}, r(1), r(1));
}

} // namespace fixtures
} // namespace ordlab
