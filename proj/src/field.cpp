#include "hopfexp/field.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopfexp {

// --- descriptors ---------------------------------------------------------------

FieldDescriptor FieldDescriptor::cyclotomic(std::int64_t n) {
    if (n < 1) throw Error(Errc::MalformedLiteral, "cyclotomic index must be >= 1");
    if (n == 1) return rational();
    return {FieldKind::Cyclotomic, n};
}

FieldDescriptor FieldDescriptor::prime_field(std::int64_t p) {
    if (!is_prime_i64(p)) throw Error(Errc::MalformedLiteral, "not a prime: " + std::to_string(p));
    return {FieldKind::PrimeField, p};
}

std::int64_t FieldDescriptor::extension_degree() const {
    switch (kind) {
        case FieldKind::Rational: return 1;
        case FieldKind::Cyclotomic: return euler_phi(param);
        case FieldKind::PrimeField: return 1;
    }
    return 1;
}

std::string FieldDescriptor::to_string() const {
    switch (kind) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(param) + ")";
        case FieldKind::PrimeField: return "F_" + std::to_string(param);
    }
    return "?";
}

// --- cyclotomic context ----------------------------------------------------------

namespace {

// dense integer polynomials, ascending coefficients
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division, assumes divisor monic and divides evenly
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
    while (num.size() >= den.size() && !num.empty()) {
        mpz_class c = num.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        ztrim(num);
    }
    return q;
}

ZPoly cyclotomic_zpoly(std::int64_t n) {
    static std::map<std::int64_t, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by all lower cyclotomics at divisors of n
    std::function<ZPoly(std::int64_t)> compute = [&](std::int64_t m) -> ZPoly {
        auto hit = cache.find(m);
        if (hit != cache.end()) return hit->second;
        ZPoly acc(static_cast<std::size_t>(m) + 1, mpz_class(0));
        acc[0] = -1;
        acc[static_cast<std::size_t>(m)] = 1;
        for (std::int64_t d : divisors(m)) {
            if (d == m) continue;
            acc = zdiv_exact(std::move(acc), compute(d));
        }
        cache[m] = acc;
        return acc;
    };
    return compute(n);
}

}  // namespace

namespace detail {

const CyclotomicContext& cyclotomic_context(std::int64_t n) {
    static std::map<std::int64_t, CyclotomicContext> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        CyclotomicContext ctx;
        ctx.n = n;
        ctx.phi_coeffs = cyclotomic_zpoly(n);
        ctx.degree = static_cast<std::int64_t>(ctx.phi_coeffs.size()) - 1;
        // reduction rows: x^{deg+t} = x^t * (x^deg mod Phi) reduced iteratively
        std::size_t deg = static_cast<std::size_t>(ctx.degree);
        std::vector<mpz_class> cur(deg, mpz_class(0));
        for (std::size_t i = 0; i < deg; ++i) cur[i] = -ctx.phi_coeffs[i];  // x^deg mod Phi
        ctx.reduction.push_back(cur);
        for (std::size_t t = 1; t + 1 < deg; ++t) {
            // multiply by x and reduce
            mpz_class top = cur[deg - 1];
            for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            for (std::size_t i = 0; i < deg; ++i) cur[i] += top * ctx.reduction[0][i];
            ctx.reduction.push_back(cur);
        }
        it = cache.emplace(n, std::move(ctx)).first;
    }
    return it->second;
}

}  // namespace detail

// --- construction ---------------------------------------------------------------

FieldElement FieldElement::zero(const FieldDescriptor& f) {
    switch (f.kind) {
        case FieldKind::Rational: return FieldElement(f, mpq_class(0));
        case FieldKind::Cyclotomic:
            return FieldElement(f, CycVec(static_cast<std::size_t>(f.extension_degree()), mpq_class(0)));
        case FieldKind::PrimeField: return FieldElement(f, mpz_class(0));
    }
    throw Error(Errc::Internal, "bad kind");
}

FieldElement FieldElement::one(const FieldDescriptor& f) {
    return from_integer(f, 1);
}

FieldElement FieldElement::from_integer(const FieldDescriptor& f, const mpz_class& v) {
    switch (f.kind) {
        case FieldKind::Rational: return FieldElement(f, mpq_class(v));
        case FieldKind::Cyclotomic: {
            CycVec c(static_cast<std::size_t>(f.extension_degree()), mpq_class(0));
            c[0] = mpq_class(v);
            return FieldElement(f, std::move(c));
        }
        case FieldKind::PrimeField: {
            mpz_class r = v % f.param;
            if (r < 0) r += f.param;
            return FieldElement(f, std::move(r));
        }
    }
    throw Error(Errc::Internal, "bad kind");
}

FieldElement FieldElement::from_rational(const FieldDescriptor& f, const mpq_class& v) {
    switch (f.kind) {
        case FieldKind::Rational: {
            mpq_class c = v;
            c.canonicalize();
            return FieldElement(f, std::move(c));
        }
        case FieldKind::Cyclotomic: {
            CycVec c(static_cast<std::size_t>(f.extension_degree()), mpq_class(0));
            c[0] = v;
            c[0].canonicalize();
            return FieldElement(f, std::move(c));
        }
        case FieldKind::PrimeField: {
            mpq_class c = v;
            c.canonicalize();
            if (c.get_den() == 1) return from_integer(f, c.get_num());
            // a/b with gcd(b, p) = 1 embeds as a * b^{-1}
            if (c.get_den() % f.param == 0)
                throw Error(Errc::NonReducibleResidue, "denominator divisible by p");
            return from_integer(f, c.get_num()) * from_integer(f, c.get_den()).inverse();
        }
    }
    throw Error(Errc::Internal, "bad kind");
}

FieldElement FieldElement::from_power_basis(const FieldDescriptor& f, CycVec coords) {
    if (f.kind != FieldKind::Cyclotomic)
        throw Error(Errc::FieldMismatch, "power basis coordinates need a cyclotomic field");
    std::size_t deg = static_cast<std::size_t>(f.extension_degree());
    if (coords.size() > deg)
        throw Error(Errc::MalformedLiteral, "coordinate vector longer than phi(n)");
    coords.resize(deg, mpq_class(0));
    for (auto& c : coords) c.canonicalize();
    return FieldElement(f, std::move(coords));
}

FieldElement FieldElement::root_power(const FieldDescriptor& f, std::int64_t k) {
    if (f.kind != FieldKind::Cyclotomic)
        throw Error(Errc::FieldMismatch, "root_power needs a cyclotomic field");
    const auto& ctx = detail::cyclotomic_context(f.param);
    std::int64_t n = f.param;
    k %= n;
    if (k < 0) k += n;
    CycVec zeta(static_cast<std::size_t>(ctx.degree), mpq_class(0));
    if (ctx.degree >= 2) {
        zeta[1] = 1;
    } else {
        zeta[0] = mpq_class(ctx.reduction[0][0]);  // x mod Phi_n for phi(n) = 1
    }
    return FieldElement(f, std::move(zeta)).pow(mpz_class(static_cast<long>(k)));
}

// --- predicates ------------------------------------------------------------------

bool FieldElement::is_zero() const {
    switch (desc_.kind) {
        case FieldKind::Rational: return rat() == 0;
        case FieldKind::Cyclotomic:
            return std::all_of(cyc().begin(), cyc().end(), [](const mpq_class& c) { return c == 0; });
        case FieldKind::PrimeField: return residue() == 0;
    }
    return false;
}

bool FieldElement::is_one() const {
    switch (desc_.kind) {
        case FieldKind::Rational: return rat() == 1;
        case FieldKind::Cyclotomic: {
            const auto& c = cyc();
            if (c.empty() || c[0] != 1) return false;
            for (std::size_t i = 1; i < c.size(); ++i)
                if (c[i] != 0) return false;
            return true;
        }
        case FieldKind::PrimeField: return residue() == 1;
    }
    return false;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (desc_ != o.desc_) return false;
    return v_ == o.v_;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (desc_ != o.desc_)
        throw Error(Errc::FieldMismatch,
                    "field mismatch: " + desc_.to_string() + " vs " + o.desc_.to_string());
}

// --- arithmetic ------------------------------------------------------------------

namespace {

void cyc_reduce(const detail::CyclotomicContext& ctx, std::vector<mpq_class>& prod) {
    // prod has length up to 2*deg-1; fold the high part through the reduction rows
    std::size_t deg = static_cast<std::size_t>(ctx.degree);
    for (std::size_t t = prod.size(); t-- > deg;) {
        mpq_class c = prod[t];
        if (c != 0) {
            const auto& row = ctx.reduction[t - deg];
            for (std::size_t i = 0; i < deg; ++i)
                if (row[i] != 0) prod[i] += c * row[i];
        }
    }
    prod.resize(deg);
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    FieldElement r = *this;
    r += o;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same(o);
    switch (desc_.kind) {
        case FieldKind::Rational: std::get<mpq_class>(v_) += o.rat(); break;
        case FieldKind::Cyclotomic: {
            auto& a = std::get<CycVec>(v_);
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.cyc()[i];
            break;
        }
        case FieldKind::PrimeField: {
            auto& a = std::get<mpz_class>(v_);
            a += o.residue();
            if (a >= desc_.param) a -= desc_.param;
            break;
        }
    }
    return *this;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    FieldElement r = *this;
    r -= o;
    return r;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same(o);
    switch (desc_.kind) {
        case FieldKind::Rational: std::get<mpq_class>(v_) -= o.rat(); break;
        case FieldKind::Cyclotomic: {
            auto& a = std::get<CycVec>(v_);
            for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.cyc()[i];
            break;
        }
        case FieldKind::PrimeField: {
            auto& a = std::get<mpz_class>(v_);
            a -= o.residue();
            if (a < 0) a += desc_.param;
            break;
        }
    }
    return *this;
}

FieldElement FieldElement::operator-() const {
    return zero(desc_) - *this;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    switch (desc_.kind) {
        case FieldKind::Rational: return FieldElement(desc_, mpq_class(rat() * o.rat()));
        case FieldKind::Cyclotomic: {
            const auto& ctx = detail::cyclotomic_context(desc_.param);
            const auto& a = cyc();
            const auto& b = o.cyc();
            std::vector<mpq_class> prod(2 * a.size() - 1, mpq_class(0));
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0) continue;
                for (std::size_t j = 0; j < b.size(); ++j)
                    if (b[j] != 0) prod[i + j] += a[i] * b[j];
            }
            cyc_reduce(ctx, prod);
            return FieldElement(desc_, std::move(prod));
        }
        case FieldKind::PrimeField: {
            mpz_class r = residue() * o.residue() % desc_.param;
            return FieldElement(desc_, std::move(r));
        }
    }
    throw Error(Errc::Internal, "bad kind");
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    *this = *this * o;
    return *this;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

void FieldElement::add_mul(FieldElement& acc, const FieldElement& a, const FieldElement& b) {
    acc.check_same(a);
    a.check_same(b);
    switch (acc.desc_.kind) {
        case FieldKind::Rational: {
            mpq_class t = a.rat() * b.rat();
            std::get<mpq_class>(acc.v_) += t;
            return;
        }
        case FieldKind::PrimeField: {
            auto& r = std::get<mpz_class>(acc.v_);
            r += a.residue() * b.residue();
            r %= acc.desc_.param;
            return;
        }
        case FieldKind::Cyclotomic: {
            acc += a * b;
            return;
        }
    }
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in " + desc_.to_string());
    switch (desc_.kind) {
        case FieldKind::Rational: {
            mpq_class r = 1 / rat();
            return FieldElement(desc_, std::move(r));
        }
        case FieldKind::PrimeField: {
            mpz_class r;
            mpz_class p(static_cast<long>(desc_.param));
            if (mpz_invert(r.get_mpz_t(), residue().get_mpz_t(), p.get_mpz_t()) == 0)
                throw Error(Errc::DivisionByZero, "no inverse mod p");
            return FieldElement(desc_, std::move(r));
        }
        case FieldKind::Cyclotomic: {
            // extended Euclid for payload against Phi_n over Q[x]
            const auto& ctx = detail::cyclotomic_context(desc_.param);
            using QP = std::vector<mpq_class>;
            auto trim = [](QP& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
            auto sub_scaled = [](QP& a, const QP& b, const mpq_class& c, std::size_t shift) {
                if (a.size() < b.size() + shift) a.resize(b.size() + shift, mpq_class(0));
                for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
            };
            QP r0;  // Phi_n
            for (const auto& z : ctx.phi_coeffs) r0.emplace_back(z);
            QP r1 = cyc();
            trim(r1);
            QP s0{}, s1{mpq_class(1)};  // coefficients on the payload side
            while (!r1.empty()) {
                // divide r0 by r1
                QP q;
                while (r0.size() >= r1.size() && !r0.empty()) {
                    mpq_class c = r0.back() / r1.back();
                    std::size_t shift = r0.size() - r1.size();
                    if (q.size() < shift + 1) q.resize(shift + 1, mpq_class(0));
                    q[shift] = c;
                    sub_scaled(r0, r1, c, shift);
                    trim(r0);
                }
                // (r0, r1) <- (r1, r0 - q r1) and same on s
                QP s2 = s0;
                for (std::size_t i = 0; i < q.size(); ++i) {
                    if (q[i] == 0) continue;
                    sub_scaled(s2, s1, q[i], i);
                }
                trim(s2);
                r0.swap(r1);  // r0 now holds the remainder, swap into place
                s0.swap(s1);
                s1.swap(s2);
            }
            // r0 is the gcd, must be a nonzero constant since Phi_n is irreducible
            if (r0.size() != 1 || r0[0] == 0)
                throw Error(Errc::Internal, "cyclotomic inverse: unexpected gcd");
            mpq_class scale = 1 / r0[0];
            QP out(static_cast<std::size_t>(ctx.degree), mpq_class(0));
            for (std::size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = s0[i] * scale;
            FieldElement inv(desc_, std::move(out));
            return inv;
        }
    }
    throw Error(Errc::Internal, "bad kind");
}

FieldElement FieldElement::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement acc = one(desc_);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

// --- literals --------------------------------------------------------------------

namespace {

// accept ASCII '-' and U+2212 as the sign
std::string normalize_minus(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size();) {
        if (i + 2 < s.size() + 1 && static_cast<unsigned char>(s[i]) == 0xE2 && i + 2 < s.size() &&
            static_cast<unsigned char>(s[i + 1]) == 0x88 && static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back('-');
            i += 3;
        } else {
            out.push_back(s[i]);
            ++i;
        }
    }
    return out;
}

mpz_class parse_mpz(const std::string& s) {
    if (s.empty()) throw Error(Errc::MalformedLiteral, "empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error(Errc::MalformedLiteral, "bare sign: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(Errc::MalformedLiteral, "bad integer literal: " + s);
    return mpz_class(s, 10);
}

mpq_class parse_mpq(const std::string& raw) {
    std::string s = normalize_minus(raw);
    auto slash = s.find('/');
    if (slash == std::string::npos) return mpq_class(parse_mpz(s));
    mpz_class num = parse_mpz(s.substr(0, slash));
    mpz_class den = parse_mpz(s.substr(slash + 1));
    if (den == 0) throw Error(Errc::MalformedLiteral, "zero denominator: " + raw);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string mpq_literal(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::string FieldElement::to_literal() const {
    switch (desc_.kind) {
        case FieldKind::Rational: return mpq_literal(rat());
        case FieldKind::PrimeField: return residue().get_str();
        case FieldKind::Cyclotomic:
            throw Error(Errc::Internal, "cyclotomic elements serialize as coordinate lists");
    }
    throw Error(Errc::Internal, "bad kind");
}

std::vector<std::string> FieldElement::power_basis_literals() const {
    if (desc_.kind != FieldKind::Cyclotomic)
        throw Error(Errc::Internal, "power_basis_literals needs a cyclotomic element");
    std::vector<std::string> out;
    out.reserve(cyc().size());
    for (const auto& c : cyc()) out.push_back(mpq_literal(c));
    return out;
}

FieldElement FieldElement::parse_literal(const FieldDescriptor& f, const std::string& s) {
    switch (f.kind) {
        case FieldKind::Rational: return from_rational(f, parse_mpq(s));
        case FieldKind::PrimeField: {
            std::string t = normalize_minus(s);
            if (t.find('/') != std::string::npos)
                throw Error(Errc::NonReducibleResidue, "prime field literal must be an integer: " + s);
            return from_integer(f, parse_mpz(t));
        }
        case FieldKind::Cyclotomic:
            throw Error(Errc::MalformedLiteral, "cyclotomic scalar must be a coordinate list");
    }
    throw Error(Errc::Internal, "bad kind");
}

FieldElement FieldElement::parse_power_basis(const FieldDescriptor& f,
                                             const std::vector<std::string>& coords) {
    if (f.kind != FieldKind::Cyclotomic)
        throw Error(Errc::MalformedLiteral, "coordinate list given for non-cyclotomic field");
    if (static_cast<std::int64_t>(coords.size()) != f.extension_degree())
        throw Error(Errc::MalformedLiteral, "coordinate list must have length phi(n)");
    CycVec v;
    v.reserve(coords.size());
    for (const auto& s : coords) v.push_back(parse_mpq(s));
    return from_power_basis(f, std::move(v));
}

std::string FieldElement::to_string() const {
    switch (desc_.kind) {
        case FieldKind::Rational: return mpq_literal(rat());
        case FieldKind::PrimeField: return residue().get_str();
        case FieldKind::Cyclotomic: {
            std::ostringstream ss;
            ss << "[";
            const auto& c = cyc();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) ss << ",";
                ss << mpq_literal(c[i]);
            }
            ss << "]";
            return ss.str();
        }
    }
    return "?";
}

// --- roots of unity ---------------------------------------------------------------

std::optional<FieldElement> primitive_root_of_unity(const FieldDescriptor& f, std::int64_t n) {
    if (n < 1) throw Error(Errc::MalformedLiteral, "order must be >= 1");
    if (n == 1) return FieldElement::one(f);
    switch (f.kind) {
        case FieldKind::Rational:
            if (n == 2) return FieldElement::from_integer(f, -1);
            return std::nullopt;
        case FieldKind::PrimeField: {
            std::int64_t p = f.param;
            if ((p - 1) % n != 0) return std::nullopt;
            auto nf = factor_i64(n);
            for (std::int64_t a = 2; a < p; ++a) {
                FieldElement b = FieldElement::from_integer(f, a).pow(mpz_class(static_cast<long>((p - 1) / n)));
                if (b.is_one()) continue;
                bool primitive = true;
                for (auto& [q, e] : nf) {
                    if (b.pow(mpz_class(static_cast<long>(n / q))).is_one()) { primitive = false; break; }
                }
                if (primitive) return b;
            }
            return std::nullopt;  // unreachable for prime p with n | p-1
        }
        case FieldKind::Cyclotomic: {
            std::int64_t m = f.param;
            std::int64_t full = std::lcm<std::int64_t>(2, m);  // order of the root-of-unity group
            if (full % n != 0) return std::nullopt;
            // generator: zeta_m when m is even, -zeta_m when m is odd
            FieldElement gen = FieldElement::root_power(f, 1);
            if (m % 2 == 1) gen = -gen;
            return gen.pow(mpz_class(static_cast<long>(full / n)));
        }
    }
    return std::nullopt;
}

std::vector<FieldElement> roots_of_unity(const FieldDescriptor& f, std::int64_t n) {
    // all x with x^n = 1: powers of a primitive d-th root for the largest d | n available
    std::int64_t best = 1;
    for (std::int64_t d : divisors(n))
        if (primitive_root_of_unity(f, d)) best = d;
    FieldElement g = *primitive_root_of_unity(f, best);
    std::vector<FieldElement> out;
    FieldElement cur = FieldElement::one(f);
    for (std::int64_t k = 0; k < best; ++k) {
        out.push_back(cur);
        cur = cur * g;
    }
    return out;
}

std::optional<std::int64_t> element_order(const FieldElement& a, std::int64_t bound) {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "order of zero");
    FieldElement cur = a;
    for (std::int64_t k = 1; k <= bound; ++k) {
        if (cur.is_one()) return k;
        cur = cur * a;
    }
    return std::nullopt;
}

}  // namespace hopfexp
