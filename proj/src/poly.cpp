#include "hopfexp/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfexp {

Polynomial::Polynomial(FieldDescriptor f, std::vector<FieldElement> coeffs)
    : desc_(f), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.descriptor() != desc_) throw Error(Errc::FieldMismatch, "coefficient field mismatch");
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) {
    Polynomial p(c.descriptor());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Polynomial Polynomial::x(const FieldDescriptor& f) {
    return monomial(f, 1, FieldElement::one(f));
}

Polynomial Polynomial::monomial(const FieldDescriptor& f, std::size_t deg, const FieldElement& c) {
    Polynomial p(f);
    if (!c.is_zero()) {
        p.c_.assign(deg + 1, FieldElement::zero(f));
        p.c_[deg] = c;
    }
    return p;
}

Polynomial Polynomial::x_pow_minus_one(const FieldDescriptor& f, std::int64_t n) {
    Polynomial p(f);
    p.c_.assign(static_cast<std::size_t>(n) + 1, FieldElement::zero(f));
    p.c_[0] = -FieldElement::one(f);
    p.c_[static_cast<std::size_t>(n)] = FieldElement::one(f);
    return p;
}

const FieldElement& Polynomial::leading() const {
    if (c_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

FieldElement Polynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : FieldElement::zero(desc_);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (desc_ != o.desc_) throw Error(Errc::FieldMismatch, "polynomial field mismatch");
    Polynomial r(desc_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), FieldElement::zero(desc_));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (desc_ != o.desc_) throw Error(Errc::FieldMismatch, "polynomial field mismatch");
    Polynomial r(desc_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), FieldElement::zero(desc_));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (desc_ != o.desc_) throw Error(Errc::FieldMismatch, "polynomial field mismatch");
    if (is_zero() || o.is_zero()) return Polynomial(desc_);
    Polynomial r(desc_);
    r.c_.assign(c_.size() + o.c_.size() - 1, FieldElement::zero(desc_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) FieldElement::add_mul(r.c_[i + j], c_[i], o.c_[j]);
    }
    r.trim();
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (desc_ != divisor.desc_) throw Error(Errc::FieldMismatch, "polynomial field mismatch");
    if (divisor.is_zero()) throw Error(Errc::DivisionByZero, "division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quo(desc_);
    FieldElement lead_inv = divisor.leading().inverse();
    if (rem.degree() >= divisor.degree())
        quo.c_.assign(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1,
                      FieldElement::zero(desc_));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        FieldElement fac = rem.leading() * lead_inv;
        std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        quo.c_[shift] = fac;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            rem.c_[shift + i] -= fac * divisor.c_[i];
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

Polynomial Polynomial::derivative() const {
    Polynomial r(desc_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * FieldElement::from_integer(desc_, static_cast<long>(i)));
    r.trim();
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    if (leading().is_one()) return *this;
    FieldElement inv = leading().inverse();
    Polynomial r = *this;
    for (auto& c : r.c_) c *= inv;
    return r;
}

FieldElement Polynomial::eval(const FieldElement& at) const {
    FieldElement acc = FieldElement::zero(desc_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

Polynomial Polynomial::pow_mod(const mpz_class& e, const Polynomial& modulus) const {
    if (e < 0) throw Error(Errc::Internal, "pow_mod with negative exponent");
    Polynomial base = *this % modulus;
    Polynomial acc = Polynomial::constant(FieldElement::one(desc_));
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base % modulus;
        base = base * base % modulus;
        k >>= 1;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream ss;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) ss << " + ";
        first = false;
        ss << c_[i].to_string();
        if (i == 1) ss << "*x";
        else if (i > 1) ss << "*x^" << i;
    }
    return ss.str();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

Polynomial poly_invmod(const Polynomial& a, const Polynomial& m) {
    // extended Euclid, tracking only the coefficient on a
    Polynomial r0 = m, r1 = a % m;
    Polynomial s0 = Polynomial::zero(a.descriptor());
    Polynomial s1 = Polynomial::constant(FieldElement::one(a.descriptor()));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Polynomial s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw Error(Errc::DivisionByZero, "poly_invmod: inputs not coprime");
    return (s0 * Polynomial::constant(r0.leading().inverse())) % m;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition_char0(const Polynomial& g) {
    if (g.descriptor().characteristic() != 0)
        throw Error(Errc::Internal, "squarefree_decomposition_char0 needs characteristic 0");
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial c = poly_gcd(g, g.derivative());
    Polynomial w = (g / c).monic();
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = poly_gcd(w, c);
        Polynomial part = (w / y).monic();
        if (part.degree() > 0) out.emplace_back(part, i);
        w = y;
        c = (c / y).monic();
        ++i;
    }
    return out;
}

Polynomial cyclotomic_polynomial(std::int64_t n, const FieldDescriptor& f) {
    // build from x^n - 1 by dividing out lower cyclotomics, over the target field
    Polynomial acc = Polynomial::x_pow_minus_one(f, n);
    for (std::int64_t d : divisors(n)) {
        if (d == n) continue;
        acc = acc / cyclotomic_polynomial(d, f);
    }
    return acc;
}

// --- order decision -------------------------------------------------------------

std::string OrderResult::to_string() const {
    std::ostringstream ss;
    if (value) ss << "order " << value->get_str();
    else ss << "infinite";
    if (std::holds_alternative<CyclotomicCertificate>(evidence)) {
        ss << " (cyclotomic indices:";
        for (auto n : std::get<CyclotomicCertificate>(evidence).indices) ss << " " << n;
        ss << ")";
    } else if (std::holds_alternative<NonSquarefree>(evidence)) {
        ss << " (non-squarefree, gcd witness " << std::get<NonSquarefree>(evidence).witness_gcd.to_string() << ")";
    } else if (std::holds_alternative<NonCyclotomicFactor>(evidence)) {
        ss << " (non-cyclotomic factor " << std::get<NonCyclotomicFactor>(evidence).witness.to_string() << ")";
    } else {
        const auto& ffo = std::get<FiniteFieldOrder>(evidence);
        ss << " (char p: p-power exponent " << ffo.p_power_exponent << ", " << ffo.factor_orders.size()
           << " factors)";
    }
    return ss.str();
}

namespace {

// order of x modulo an irreducible f over F_p: divides p^deg - 1
mpz_class order_mod_irreducible(const Polynomial& f) {
    std::int64_t p = f.descriptor().characteristic();
    mpz_class group;
    mpz_ui_pow_ui(group.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(f.degree()));
    group -= 1;
    if (f.degree() == 0) throw Error(Errc::Internal, "order of constant");
    Polynomial x = Polynomial::x(f.descriptor());
    mpz_class order = group;
    for (auto& [q, e] : factor_mpz(group)) {
        for (int k = 0; k < e; ++k) {
            mpz_class cand = order / q;
            Polynomial r = x.pow_mod(cand, f);
            if (r == Polynomial::constant(FieldElement::one(f.descriptor())))
                order = cand;
            else
                break;
        }
    }
    return order;
}

OrderResult order_char0(const Polynomial& g) {
    FieldDescriptor f = g.descriptor();
    Polynomial deriv = g.derivative();
    Polynomial sq = poly_gcd(g, deriv);
    if (sq.degree() > 0)
        return {std::nullopt, NonSquarefree{sq}};

    // peel roots of unity ascending; every root of order d gives gcd with x^d - 1
    std::int64_t bound = g.degree() * f.extension_degree();
    Polynomial rest = g.monic();
    std::vector<std::int64_t> indices;
    mpz_class order = 1;
    for (std::int64_t n = 1; rest.degree() > 0; ++n) {
        if (euler_phi(n) > bound) {
            // no further candidate order can divide the remainder
            bool any_left = false;
            for (std::int64_t m = n; m <= 4 * bound * bound + 4; ++m)
                if (euler_phi(m) <= bound) { any_left = true, n = m - 1; break; }
            if (!any_left) break;
            continue;
        }
        Polynomial f_n = poly_gcd(rest, Polynomial::x_pow_minus_one(f, n));
        if (f_n.degree() > 0) {
            indices.push_back(n);
            order = lcm_mpz(order, mpz_class(static_cast<long>(n)));
            rest = (rest / f_n).monic();
        }
    }
    if (rest.degree() > 0)
        return {std::nullopt, NonCyclotomicFactor{rest}};
    return {order, CyclotomicCertificate{std::move(indices)}};
}

OrderResult order_char_p(const Polynomial& g) {
    FieldDescriptor f = g.descriptor();
    std::int64_t p = f.characteristic();
    if (g.coeff(0).is_zero()) {
        // x divides g: x is a zero divisor, never a unit power of 1
        return {std::nullopt, NonCyclotomicFactor{Polynomial::x(f)}};
    }
    auto factors = factor_prime_field(g);
    mpz_class n_prime = 1;
    int max_mult = 1;
    FiniteFieldOrder ev;
    for (auto& [fac, mult] : factors) {
        mpz_class ord = order_mod_irreducible(fac);
        ev.factor_orders.emplace_back(ord, fac.degree());
        n_prime = lcm_mpz(n_prime, ord);
        max_mult = std::max(max_mult, mult);
    }
    std::int64_t a = 0;
    mpz_class pa = 1;
    while (pa < max_mult) { pa *= p; ++a; }
    ev.p_power_exponent = a;
    mpz_class order = n_prime * pa;
    return {order, std::move(ev)};
}

}  // namespace

OrderResult root_of_unity_order(const Polynomial& g) {
    if (g.is_zero() || !g.is_monic()) throw Error(Errc::NotMonic, "root_of_unity_order needs a monic polynomial");
    if (g.degree() < 1) throw Error(Errc::NotMonic, "degree must be >= 1");
    if (g.descriptor().characteristic() == 0) return order_char0(g);
    return order_char_p(g);
}

// --- factorization over F_p -------------------------------------------------------

namespace {

// p-th root of a polynomial whose derivative vanishes (all exponents divisible by p)
Polynomial pth_root(const Polynomial& g) {
    FieldDescriptor f = g.descriptor();
    std::int64_t p = f.characteristic();
    std::vector<FieldElement> out;
    for (std::int64_t i = 0; i <= g.degree(); i += p)
        out.push_back(g.coeff(static_cast<std::size_t>(i)));  // over F_p, c^(1/p) = c
    return Polynomial(f, std::move(out));
}

// squarefree decomposition (Yun, adapted for char p)
void squarefree_decompose(const Polynomial& g, int outer_mult,
                          std::vector<std::pair<Polynomial, int>>& out) {
    FieldDescriptor f = g.descriptor();
    std::int64_t p = f.characteristic();
    if (g.degree() == 0) return;
    Polynomial deriv = g.derivative();
    if (deriv.is_zero()) {
        squarefree_decompose(pth_root(g), outer_mult * static_cast<int>(p), out);
        return;
    }
    Polynomial c = poly_gcd(g, deriv);
    Polynomial w = (g / c).monic();
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = poly_gcd(w, c);
        Polynomial part = (w / y).monic();
        if (part.degree() > 0) out.emplace_back(part, i * outer_mult);
        w = y;
        c = (c / y).monic();
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(pth_root(c), outer_mult * static_cast<int>(p), out);
}

// distinct-degree: split squarefree g into products of irreducibles of equal degree
std::vector<std::pair<Polynomial, std::int64_t>> distinct_degree(const Polynomial& g) {
    FieldDescriptor f = g.descriptor();
    std::int64_t p = f.characteristic();
    std::vector<std::pair<Polynomial, std::int64_t>> out;
    Polynomial rest = g.monic();
    Polynomial h = Polynomial::x(f);  // x^{p^d} mod rest, updated per degree
    for (std::int64_t d = 1; rest.degree() >= 2 * d; ++d) {
        h = h.pow_mod(mpz_class(static_cast<long>(p)), rest);
        Polynomial diff = h - Polynomial::x(f);
        Polynomial fac = poly_gcd(rest, diff);
        if (fac.degree() > 0) {
            out.emplace_back(fac, d);
            rest = (rest / fac).monic();
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus; trace construction for p = 2)
void equal_degree(const Polynomial& g, std::int64_t d, SplitMix64& rng,
                  std::vector<Polynomial>& out) {
    FieldDescriptor f = g.descriptor();
    std::int64_t p = f.characteristic();
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    while (true) {
        // deterministic pseudorandom polynomial of degree < deg(g)
        std::vector<FieldElement> coeffs;
        for (std::int64_t i = 0; i < g.degree(); ++i)
            coeffs.push_back(FieldElement::from_integer(f, static_cast<long>(rng.below(static_cast<std::uint64_t>(p)))));
        Polynomial h(f, std::move(coeffs));
        if (h.degree() < 1) continue;
        Polynomial split(f);
        if (p == 2) {
            // trace map over F_{2^d}
            Polynomial t = h % g, acc = t;
            for (std::int64_t i = 1; i < d; ++i) {
                t = t * t % g;
                acc = acc + t;
            }
            split = poly_gcd(g, acc);
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            Polynomial t = h.pow_mod(e, g) - Polynomial::constant(FieldElement::one(f));
            split = poly_gcd(g, t);
        }
        if (split.degree() > 0 && split.degree() < g.degree()) {
            equal_degree(split, d, rng, out);
            equal_degree((g / split).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

namespace {

// f of degree d is irreducible iff x^{p^d} = x mod f and, for each prime q | d,
// gcd(x^{p^{d/q}} - x, f) is constant
bool is_irreducible_mod_p(const Polynomial& f) {
    std::int64_t p = f.descriptor().characteristic();
    std::int64_t d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    Polynomial x = Polynomial::x(f.descriptor());
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    if (x.pow_mod(pd, f) != x % f) return false;
    for (auto& [q, e] : factor_i64(d)) {
        mpz_class pdq;
        mpz_ui_pow_ui(pdq.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(d / q));
        Polynomial witness = x.pow_mod(pdq, f) - x;
        if (poly_gcd(witness, f).degree() > 0) return false;
    }
    return true;
}

}  // namespace

std::vector<std::pair<Polynomial, int>> factor_prime_field(const Polynomial& g, std::uint64_t seed) {
    if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
    if (g.descriptor().characteristic() == 0)
        throw Error(Errc::Internal, "factor_prime_field needs a prime field");
    std::vector<std::pair<Polynomial, int>> squarefree;
    squarefree_decompose(g.monic(), 1, squarefree);
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ULL + 12345);
    std::vector<std::pair<Polynomial, int>> out;
    for (auto& [part, mult] : squarefree) {
        for (auto& [prod, d] : distinct_degree(part)) {
            std::vector<Polynomial> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& fac : irr) {
                if (!is_irreducible_mod_p(fac))
                    throw Error(Errc::Internal, "factor failed the irreducibility check");
                out.emplace_back(fac, mult);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (std::int64_t i = a.first.degree(); i >= 0; --i) {
            const auto& ca = a.first.coeff(static_cast<std::size_t>(i));
            const auto& cb = b.first.coeff(static_cast<std::size_t>(i));
            if (!(ca == cb)) return ca.residue() < cb.residue();
        }
        return a.second < b.second;
    });
    return out;
}

}  // namespace hopfexp
