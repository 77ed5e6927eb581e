#include "fixtures.hpp"

#include <stdexcept>
#include <vector>

namespace fixtures {

namespace {

struct Sym {
    std::vector<Polynomial> a; // 1-based access through a()
    Polynomial p, q, r, s;
    const Polynomial& A(int k) const { return a[k - 1]; }
};

Sym sym(int n) {
    Sym s;
    s.a = ringforge::symbolic_form_coeffs(n);
    auto m = ringforge::matrix_symbols();
    s.p = m.p;
    s.q = m.q;
    s.r = m.r;
    s.s = m.s;
    return s;
}

PolyMatrix qbt3() {
    const Sym v = sym(3);
    const Polynomial &p = v.p, &r = v.r;
    PolyMatrix w(3, 3);
    w.at(0, 0) = p * p;
    w.at(0, 1) = -(v.A(4) * r * r);
    w.at(0, 2) = 2 * v.A(4) * p * r;
    w.at(1, 0) = -2 * p * r;
    w.at(1, 1) = v.A(1) * p * p - v.A(3) * r * r;
    w.at(1, 2) = v.A(2) * p * p + 2 * v.A(3) * p * r - v.A(4) * r * r;
    w.at(2, 0) = r * r;
    w.at(2, 1) = -(r * (2 * v.A(1) * p + v.A(2) * r));
    w.at(2, 2) = v.A(1) * p * p - v.A(3) * r * r;
    return w;
}

PolyMatrix qbt4() {
    const Sym v = sym(4);
    const Polynomial &p = v.p, &r = v.r;
    PolyMatrix w(4, 4);
    w.at(0, 0) = p.pow(3);
    w.at(0, 1) = v.A(5) * r.pow(3);
    w.at(0, 2) = -3 * v.A(5) * p * r * r;
    w.at(0, 3) = 3 * v.A(5) * p * p * r;
    w.at(1, 0) = -3 * p * p * r;
    w.at(1, 1) = v.A(1) * p.pow(3) + v.A(4) * r.pow(3);
    w.at(1, 2) = v.A(2) * p.pow(3) - 3 * v.A(4) * p * r * r + v.A(5) * r.pow(3);
    w.at(1, 3) = p * (v.A(3) * p * p + 3 * v.A(4) * p * r - 3 * v.A(5) * r * r);
    w.at(2, 0) = 3 * p * r * r;
    w.at(2, 1) = r * (v.A(3) * r * r - 3 * v.A(1) * p * p);
    w.at(2, 2) = v.A(1) * p.pow(3) - 3 * v.A(2) * p * p * r - 3 * v.A(3) * p * r * r + v.A(4) * r.pow(3);
    w.at(2, 3) = v.A(2) * p.pow(3) - 3 * v.A(4) * p * r * r + v.A(5) * r.pow(3);
    w.at(3, 0) = -r.pow(3);
    w.at(3, 1) = r * r * (3 * v.A(1) * p + v.A(2) * r);
    w.at(3, 2) = r * (v.A(3) * r * r - 3 * v.A(1) * p * p);
    w.at(3, 3) = v.A(1) * p.pow(3) + v.A(4) * r.pow(3);
    return w;
}

PolyMatrix qbt5() {
    const Sym v = sym(5);
    const Polynomial &p = v.p, &r = v.r;
    PolyMatrix w(5, 5);
    // left block
    w.at(0, 0) = p.pow(4);
    w.at(0, 1) = -(v.A(6) * r.pow(4));
    w.at(0, 2) = 4 * v.A(6) * p * r.pow(3);
    w.at(1, 0) = -4 * p.pow(3) * r;
    w.at(1, 1) = v.A(1) * p.pow(4) - v.A(5) * r.pow(4);
    w.at(1, 2) = v.A(2) * p.pow(4) + 4 * v.A(5) * p * r.pow(3) - v.A(6) * r.pow(4);
    w.at(2, 0) = 6 * p * p * r * r;
    w.at(2, 1) = -(r * (4 * v.A(1) * p.pow(3) + v.A(4) * r.pow(3)));
    w.at(2, 2) =
        v.A(1) * p.pow(4) - 4 * v.A(2) * p.pow(3) * r + 4 * v.A(4) * p * r.pow(3) - v.A(5) * r.pow(4);
    w.at(3, 0) = -4 * p * r.pow(3);
    w.at(3, 1) = r * r * (6 * v.A(1) * p * p - v.A(3) * r * r);
    w.at(3, 2) = -(r * (4 * v.A(1) * p.pow(3) - 6 * v.A(2) * p * p * r - 4 * v.A(3) * p * r * r +
                        v.A(4) * r.pow(3)));
    w.at(4, 0) = r.pow(4);
    w.at(4, 1) = -(r.pow(3) * (4 * v.A(1) * p + v.A(2) * r));
    w.at(4, 2) = r * r * (6 * v.A(1) * p * p - v.A(3) * r * r);
    // right block
    w.at(0, 3) = -6 * v.A(6) * p * p * r * r;
    w.at(0, 4) = 4 * v.A(6) * p.pow(3) * r;
    w.at(1, 3) = p * (v.A(3) * p.pow(3) - 6 * v.A(5) * p * r * r + 4 * v.A(6) * r.pow(3));
    w.at(1, 4) = -(p * p * (-4 * v.A(5) * p * r - v.A(4) * p * p + 6 * v.A(6) * r * r));
    w.at(2, 3) = v.A(2) * p.pow(4) - 4 * v.A(3) * p.pow(3) * r - 6 * v.A(4) * p * p * r * r +
                 4 * v.A(5) * p * r.pow(3) - v.A(6) * r.pow(4);
    w.at(2, 4) = p * (v.A(3) * p.pow(3) - 6 * v.A(5) * p * r * r + 4 * v.A(6) * r.pow(3));
    w.at(3, 3) =
        v.A(1) * p.pow(4) - 4 * v.A(2) * p.pow(3) * r + 4 * v.A(4) * p * r.pow(3) - v.A(5) * r.pow(4);
    w.at(3, 4) = v.A(2) * p.pow(4) + 4 * v.A(5) * p * r.pow(3) - v.A(6) * r.pow(4);
    w.at(4, 3) = -(r * (4 * v.A(1) * p.pow(3) + v.A(4) * r.pow(3)));
    w.at(4, 4) = v.A(1) * p.pow(4) - v.A(5) * r.pow(4);
    return w;
}

PolyMatrix qbt6() {
    const Sym v = sym(6);
    const Polynomial &p = v.p, &r = v.r;
    PolyMatrix w(6, 6);
    // first block, columns 1..3
    w.at(0, 0) = p.pow(5);
    w.at(0, 1) = v.A(7) * r.pow(5);
    w.at(0, 2) = -5 * v.A(7) * p * r.pow(4);
    w.at(1, 0) = -5 * p.pow(4) * r;
    w.at(1, 1) = v.A(1) * p.pow(5) + v.A(6) * r.pow(5);
    w.at(1, 2) = v.A(2) * p.pow(5) - 5 * v.A(6) * p * r.pow(4) + v.A(7) * r.pow(5);
    w.at(2, 0) = 10 * p.pow(3) * r * r;
    w.at(2, 1) = -(r * (5 * v.A(1) * p.pow(4) - v.A(5) * r.pow(4)));
    w.at(2, 2) =
        v.A(1) * p.pow(5) - 5 * v.A(2) * p.pow(4) * r - 5 * v.A(5) * p * r.pow(4) + v.A(6) * r.pow(5);
    w.at(3, 0) = -10 * p * p * r.pow(3);
    w.at(3, 1) = r * r * (10 * v.A(1) * p.pow(3) + v.A(4) * r.pow(3));
    w.at(3, 2) = -(r * (5 * v.A(1) * p.pow(4) - 10 * v.A(2) * p.pow(3) * r + 5 * v.A(4) * p * r.pow(3) -
                        v.A(5) * r.pow(4)));
    w.at(4, 0) = 5 * p * r.pow(4);
    w.at(4, 1) = -(r.pow(3) * (10 * v.A(1) * p * p - v.A(3) * r * r));
    w.at(4, 2) = r * r * (10 * v.A(1) * p.pow(3) - 10 * v.A(2) * p * p * r - 5 * v.A(3) * p * r * r +
                          v.A(4) * r.pow(3));
    w.at(5, 0) = -r.pow(5);
    w.at(5, 1) = r.pow(4) * (5 * v.A(1) * p + v.A(2) * r);
    w.at(5, 2) = -(r.pow(3) * (10 * v.A(1) * p * p - v.A(3) * r * r));
    // middle column 4
    w.at(0, 3) = 10 * v.A(7) * p * p * r.pow(3);
    w.at(1, 3) = -(p * (-10 * v.A(6) * p * r.pow(3) - v.A(3) * p.pow(4) + 5 * v.A(7) * r.pow(4)));
    w.at(2, 3) = v.A(2) * p.pow(5) - 5 * v.A(3) * p.pow(4) * r + 10 * v.A(5) * p * p * r.pow(3) -
                 5 * v.A(6) * p * r.pow(4) + v.A(7) * r.pow(5);
    w.at(3, 3) = v.A(1) * p.pow(5) - 5 * v.A(2) * p.pow(4) * r + 10 * v.A(3) * p.pow(3) * r * r +
                 10 * v.A(4) * p * p * r.pow(3) - 5 * v.A(5) * p * r.pow(4) + v.A(6) * r.pow(5);
    w.at(4, 3) = -(r * (5 * v.A(1) * p.pow(4) - 10 * v.A(2) * p.pow(3) * r + 5 * v.A(4) * p * r.pow(3) -
                        v.A(5) * r.pow(4)));
    w.at(5, 3) = r * r * (10 * v.A(1) * p.pow(3) + v.A(4) * r.pow(3));
    // last block, columns 5..6
    w.at(0, 4) = -10 * v.A(7) * p.pow(3) * r * r;
    w.at(0, 5) = 5 * v.A(7) * p.pow(4) * r;
    w.at(1, 4) = p * p * (v.A(4) * p.pow(3) - 10 * v.A(6) * p * r * r + 10 * v.A(7) * r.pow(3));
    w.at(1, 5) = -(p.pow(3) * (-5 * v.A(6) * p * r - v.A(5) * p * p + 10 * v.A(7) * r * r));
    w.at(2, 4) = -(p * (5 * v.A(4) * p.pow(3) * r + 10 * v.A(5) * p * p * r * r -
                        10 * v.A(6) * p * r.pow(3) - v.A(3) * p.pow(4) + 5 * v.A(7) * r.pow(4)));
    w.at(2, 5) = p * p * (v.A(4) * p.pow(3) - 10 * v.A(6) * p * r * r + 10 * v.A(7) * r.pow(3));
    w.at(3, 4) = v.A(2) * p.pow(5) - 5 * v.A(3) * p.pow(4) * r + 10 * v.A(5) * p * p * r.pow(3) -
                 5 * v.A(6) * p * r.pow(4) + v.A(7) * r.pow(5);
    w.at(3, 5) = -(p * (-10 * v.A(6) * p * r.pow(3) - v.A(3) * p.pow(4) + 5 * v.A(7) * r.pow(4)));
    w.at(4, 4) =
        v.A(1) * p.pow(5) - 5 * v.A(2) * p.pow(4) * r - 5 * v.A(5) * p * r.pow(4) + v.A(6) * r.pow(5);
    w.at(4, 5) = v.A(2) * p.pow(5) - 5 * v.A(6) * p * r.pow(4) + v.A(7) * r.pow(5);
    w.at(5, 4) = -(r * (5 * v.A(1) * p.pow(4) - v.A(5) * r.pow(4)));
    w.at(5, 5) = v.A(1) * p.pow(5) + v.A(6) * r.pow(5);
    return w;
}

} // namespace

PolyMatrix qbt_reference(int n) {
    switch (n) {
    case 3:
        return qbt3();
    case 4:
        return qbt4();
    case 5:
        return qbt5();
    case 6:
        return qbt6();
    default:
        throw std::invalid_argument("qbt_reference: only n = 3..6 are transcribed");
    }
}

PolyMatrix special_matrix_3() {
    const Sym v = sym(3);
    PolyMatrix n(3, 3);
    n.at(0, 0) = v.p * v.A(1);
    n.at(0, 2) = v.r * v.A(1) * v.A(4);
    n.at(1, 0) = -v.r;
    n.at(1, 1) = v.p * v.A(1) + v.r * v.A(2);
    n.at(1, 2) = v.r * v.A(3);
    n.at(2, 1) = -(v.r * v.A(1));
    n.at(2, 2) = v.p * v.A(1);
    return n;
}

PolyMatrix cubic_T_inverse() {
    const Sym v = sym(3);
    const Polynomial &p = v.p, &q = v.q, &r = v.r, &s = v.s;
    const Polynomial u12 = -(-(v.A(1) * p * p * q * s) + 2 * v.A(1) * p * q * q * r +
                             v.A(2) * q * q * r * r + v.A(3) * q * r * r * s + v.A(4) * r * r * s * s);
    const Polynomial u13 = -(-(v.A(2) * p * p * q * s) - 2 * v.A(3) * p * q * r * s -
                             2 * v.A(4) * p * r * s * s - v.A(1) * p * p * q * q +
                             v.A(3) * q * q * r * r + v.A(4) * q * r * r * s);
    PolyMatrix t(3, 3);
    t.at(0, 0) = Polynomial(1);
    t.at(0, 1) = u12;
    t.at(0, 2) = u13;
    t.at(1, 1) = s;
    t.at(1, 2) = -q;
    t.at(2, 1) = -r;
    t.at(2, 2) = p;
    return t;
}

} // namespace fixtures
