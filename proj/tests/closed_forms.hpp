#ifndef VORTEXEQ_TESTS_CLOSED_FORMS_HPP
#define VORTEXEQ_TESTS_CLOSED_FORMS_HPP

// Closed forms of the low members of each family, written out
// term by term so they can be compared with generated members.

#include "support.hpp"

namespace vortexeq::testing::closed_form
{

using G = GaussianRational;

// Adler-Moser
inline Poly P2(const G& s1) { return terms({{3, 1}, {0, s1}}); }

inline Poly P3(const G& s1, const G& s2)
{
    return terms({{6, 1}, {3, R(5) * s1}, {1, s2}, {0, R(-5) * s1 * s1}});
}

// Λ = 2, n ≥ 0
inline Poly q1() { return Poly::z(); }
inline Poly p1(const G& t1) { return terms({{5, 1}, {0, t1}}); }
inline Poly q2(const G& t1, const G& s2) { return terms({{5, 1}, {1, s2}, {0, R(-4) * t1}}); }

inline Poly p2(const G& t1, const G& s2, const G& t2)
{
    const G s2_2 = s2 * s2, s2_3 = s2_2 * s2, s2_4 = s2_3 * s2;
    const G t1_2 = t1 * t1, t1_3 = t1_2 * t1;
    return terms({{16, 1},
                  {12, R(44, 7) * s2},
                  {11, R(-32) * t1},
                  {8, R(22) * s2_2},
                  {7, R(-2112, 7) * t1 * s2},
                  {6, R(1408) * t1_2},
                  {5, t2},
                  {4, R(-44) * s2_3},
                  {3, R(352) * t1 * s2_2},
                  {2, R(-1408) * s2 * t1_2},
                  {1, R(2816) * t1_3},
                  {0, t2 * t1 - R(11, 5) * s2_4}});
}

// Λ = 2, n ≤ 0
inline Poly q_m1(const G& s_1) { return terms({{2, 1}, {0, s_1}}); }
inline Poly p_m1() { return Poly::z(); }

inline Poly q_m2(const G& s_1, const G& s_2, const G& t_2)
{
    const G a2 = s_1 * s_1, a3 = a2 * s_1;
    return terms({{7, 1},
                  {5, R(7) * s_1},
                  {3, R(35) * a2},
                  {2, s_2},
                  {1, R(-35) * a3},
                  {0, s_1 * s_2 - R(5, 2) * t_2}});
}

inline Poly p_m2(const G& s_1, const G& t_2)
{
    const G a2 = s_1 * s_1, a3 = a2 * s_1, a4 = a3 * s_1;
    return terms({{8, 1}, {6, R(28, 5) * s_1}, {4, R(14) * a2}, {2, R(28) * a3}, {1, t_2}, {0, R(-7) * a4}});
}

// Λ = 1 with P_1 = z^(1/2)
inline HalfPoly half_P2(const G& t1) { return H(terms({{2, 1}, {0, t1}})); }
inline HalfPoly half_P3(const G& t2) { return Hhalf(terms({{4, 1}, {0, t2}})); }

inline HalfPoly half_P4(const G& t2, const G& t3)
{
    return H(terms({{8, 1}, {4, R(6) * t2}, {2, t3}, {0, R(-3) * t2 * t2}}));
}

// Λ = 2 with p_0 = z²
inline HalfPoly term_q1(const G& t1) { return H(terms({{3, 1}, {0, t1}})); }
inline HalfPoly term_p1(const G& t2) { return H(terms({{11, 1}, {2, t2}})); }
inline HalfPoly term_q2(const G& t2, const G& t3) { return H(terms({{9, 1}, {3, t3}, {0, R(-2) * t2}})); }

} // namespace vortexeq::testing::closed_form

#endif
