#include "hopfexp/matrix.hpp"

#include <sstream>

#include "hopfexp/kernels.hpp"

namespace hopfexp {

Vec vec_zero(const FieldDescriptor& f, std::size_t n) { return Vec(n, FieldElement::zero(f)); }

bool vec_is_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sizes differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sizes differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Vec& a, const FieldElement& c) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

FieldElement vec_dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sizes differ");
    if (a.empty()) throw Error(Errc::DimensionMismatch, "empty dot product");
    FieldElement acc = FieldElement::zero(a[0].descriptor());
    for (std::size_t i = 0; i < a.size(); ++i) FieldElement::add_mul(acc, a[i], b[i]);
    return acc;
}

Matrix Matrix::identity(const FieldDescriptor& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(f);
    return m;
}

Matrix Matrix::from_columns(const FieldDescriptor& f, std::size_t dim, const std::vector<Vec>& cols) {
    Matrix m(f, dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != dim) throw Error(Errc::DimensionMismatch, "column size mismatch");
        for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::DimensionMismatch, "matrix add");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::DimensionMismatch, "matrix sub");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const { return kernels::matmul(*this, o); }

Vec Matrix::operator*(const Vec& v) const {
    if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector product");
    Vec out = vec_zero(desc_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        FieldElement& acc = out[r];
        for (std::size_t c = 0; c < cols_; ++c) {
            const FieldElement& m = at(r, c);
            if (!m.is_zero() && !v[c].is_zero()) FieldElement::add_mul(acc, m, v[c]);
        }
    }
    return out;
}

Matrix Matrix::scaled(const FieldElement& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(desc_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(const mpz_class& e) const {
    if (rows_ != cols_) throw Error(Errc::DimensionMismatch, "power of non-square matrix");
    if (e < 0) return inverse(*this).pow(-e);
    Matrix base = *this;
    Matrix acc = identity(desc_, rows_);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Matrix::row(std::size_t r) const {
    Vec out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

Vec Matrix::col(std::size_t c) const {
    Vec out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

void Matrix::set_col(std::size_t c, const Vec& v) {
    if (v.size() != rows_) throw Error(Errc::DimensionMismatch, "set_col size");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

std::string Matrix::to_string() const {
    std::ostringstream ss;
    for (std::size_t i = 0; i < rows_; ++i) {
        ss << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) ss << (j ? " " : "") << at(i, j).to_string();
        ss << "]";
    }
    return ss.str();
}

// --- elimination -----------------------------------------------------------------

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // first nonzero pivot in column c at or below row r
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        FieldElement inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            FieldElement f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

SolveResult solve_linear(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw Error(Errc::DimensionMismatch, "rhs length mismatch");
    Matrix aug(a.descriptor(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    // inconsistent iff a pivot lands in the rhs column
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols()) {
            SolveResult res;
            res.certificate_row = aug.row(r);
            return res;
        }
    }
    Vec x = vec_zero(a.descriptor(), a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    SolveResult res;
    res.solution = std::move(x);
    return res;
}

std::vector<Vec> kernel_basis(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (std::size_t free_c = 0; free_c < a.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v = vec_zero(a.descriptor(), a.cols());
        v[free_c] = FieldElement::one(a.descriptor());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < free_c) v[pivots[r]] = -m.at(r, free_c);
        out.push_back(std::move(v));
    }
    return out;
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
    std::size_t n = a.rows();
    Matrix aug(a.descriptor(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = FieldElement::one(a.descriptor());
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw Error(Errc::Singular, "matrix not invertible");
    Matrix out(a.descriptor(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

bool is_invertible(const Matrix& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

// --- echelon span ---------------------------------------------------------------

bool Echelon::insert(Vec v) {
    if (v.size() != ambient_) throw Error(Errc::DimensionMismatch, "echelon insert size");
    Vec combo;
    if (track_) {
        combo = vec_zero(desc_, n_inserted_ + 1);
        combo[n_inserted_] = FieldElement::one(desc_);
        for (auto& c : combo_) c.resize(n_inserted_ + 1, FieldElement::zero(desc_));
    }
    ++n_inserted_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FieldElement& lead = v[pivot_[r]];
        if (lead.is_zero()) continue;
        FieldElement f = lead;
        for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
        if (track_)
            for (std::size_t j = 0; j < combo.size(); ++j) combo[j] -= f * combo_[r][j];
    }
    std::size_t p = 0;
    while (p < ambient_ && v[p].is_zero()) ++p;
    if (p == ambient_) return false;
    FieldElement inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    if (track_) {
        for (auto& x : combo) x *= inv;
        combo_.push_back(std::move(combo));
    }
    rows_.push_back(std::move(v));
    pivot_.push_back(p);
    return true;
}

Vec Echelon::reduce(Vec v) const {
    if (v.size() != ambient_) throw Error(Errc::DimensionMismatch, "echelon reduce size");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FieldElement& lead = v[pivot_[r]];
        if (lead.is_zero()) continue;
        FieldElement f = lead;
        for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool Echelon::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

std::optional<Vec> Echelon::express(const Vec& v) const {
    if (!track_) throw Error(Errc::Internal, "express needs tracking enabled");
    Vec w = v;
    Vec coords = vec_zero(desc_, n_inserted_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FieldElement& lead = w[pivot_[r]];
        if (lead.is_zero()) continue;
        FieldElement f = lead;
        for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * rows_[r][j];
        for (std::size_t j = 0; j < combo_[r].size(); ++j)
            FieldElement::add_mul(coords[j], f, combo_[r][j]);
    }
    if (!vec_is_zero(w)) return std::nullopt;
    return coords;
}

// --- Krylov ---------------------------------------------------------------------

Polynomial relative_min_poly_apply(const std::function<Vec(const Vec&)>& apply, const Vec& v,
                                   const FieldDescriptor& f) {
    Echelon ech(f, v.size(), /*track=*/true);
    Vec cur = v;
    while (true) {
        if (!ech.insert(cur)) {
            // cur = K_m depends on K_0..K_{m-1}
            auto coords = ech.express(cur);
            if (!coords) throw Error(Errc::Internal, "krylov: dependent vector not expressible");
            std::size_t m = ech.dim();
            std::vector<FieldElement> g(m + 1, FieldElement::zero(f));
            for (std::size_t s = 0; s < m; ++s) g[s] = -(*coords)[s];
            g[m] = FieldElement::one(f);
            return Polynomial(f, std::move(g));
        }
        cur = apply(cur);
    }
}

Polynomial relative_min_poly(const Matrix& l, const Vec& v) {
    if (l.rows() != l.cols() || l.cols() != v.size())
        throw Error(Errc::DimensionMismatch, "relative_min_poly dimensions");
    if (vec_is_zero(v)) return Polynomial::constant(FieldElement::one(l.descriptor()));
    return relative_min_poly_apply([&](const Vec& x) { return l * x; }, v, l.descriptor());
}

Matrix eval_poly_at(const Polynomial& p, const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "eval_poly_at needs square");
    Matrix acc(m.descriptor(), m.rows(), m.cols());
    for (std::int64_t i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        FieldElement c = p.coeff(static_cast<std::size_t>(i));
        for (std::size_t d = 0; d < m.rows(); ++d) acc.at(d, d) += c;
    }
    return acc;
}

Polynomial charpoly(const Matrix& m_in) {
    if (m_in.rows() != m_in.cols()) throw Error(Errc::DimensionMismatch, "charpoly needs square");
    const FieldDescriptor f = m_in.descriptor();
    std::size_t n = m_in.rows();
    if (n == 0) return Polynomial::constant(FieldElement::one(f));
    Matrix h = m_in;
    // similarity reduction to upper Hessenberg with exact pivoting
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t pr = c + 1;
        while (pr < n && h.at(pr, c).is_zero()) ++pr;
        if (pr == n) continue;
        if (pr != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h.at(pr, j), h.at(c + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, pr), h.at(i, c + 1));
        }
        FieldElement inv = h.at(c + 1, c).inverse();
        for (std::size_t i = c + 2; i < n; ++i) {
            if (h.at(i, c).is_zero()) continue;
            FieldElement fac = h.at(i, c) * inv;
            for (std::size_t j = 0; j < n; ++j) h.at(i, j) -= fac * h.at(c + 1, j);
            for (std::size_t r = 0; r < n; ++r) h.at(r, c + 1) += fac * h.at(r, i);
        }
    }
    // leading principal characteristic polynomials of the Hessenberg form
    std::vector<Polynomial> p;
    p.push_back(Polynomial::constant(FieldElement::one(f)));
    Polynomial x = Polynomial::x(f);
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial term = (x - Polynomial::constant(h.at(k - 1, k - 1))) * p[k - 1];
        FieldElement prod = FieldElement::one(f);
        for (std::size_t i = k - 1; i-- > 0;) {
            prod *= h.at(i + 1, i);
            if (prod.is_zero()) break;
            Polynomial sub = Polynomial::constant(h.at(i, k - 1) * prod) * p[i];
            term = term - sub;
        }
        p.push_back(term);
    }
    return p[n];
}

Polynomial minimal_polynomial(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "minimal_polynomial needs square");
    const FieldDescriptor f = m.descriptor();
    std::size_t n = m.rows();
    Polynomial acc = Polynomial::constant(FieldElement::one(f));
    for (std::size_t i = 0; i < n; ++i) {
        Vec e = vec_zero(f, n);
        e[i] = FieldElement::one(f);
        Polynomial gi = relative_min_poly(m, e);
        Polynomial g = poly_gcd(acc, gi);
        acc = (acc * gi / g).monic();
        if (acc.degree() == static_cast<std::int64_t>(n)) break;
    }
    return acc;
}

OrderResult matrix_multiplicative_order(const Matrix& m) {
    if (!is_invertible(m)) throw Error(Errc::Singular, "order of a singular matrix");
    Polynomial mp = minimal_polynomial(m);
    OrderResult res = root_of_unity_order(mp);
    if (res.finite()) {
        if (!m.pow(*res.value).is_identity())
            throw Error(Errc::Internal, "order certificate failed verification");
    }
    return res;
}

std::vector<Vec> annihilator(const std::vector<Vec>& vectors, std::size_t ambient,
                             const FieldDescriptor& f) {
    // functionals phi with phi(v) = 0 for all given v: kernel of the matrix with rows v
    Matrix m(f, vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient) throw Error(Errc::DimensionMismatch, "annihilator input");
        for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
    }
    return kernel_basis(m);
}

}  // namespace hopfexp
