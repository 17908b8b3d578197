#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopfexp/kernels.hpp"

namespace hopfexp {

/// Sparse element of H^{(x) legs}; term index is big-endian in the legs:
/// index = sum_t idx_t * dim^(legs-1-t). Terms sorted by index, no zeros.
struct TensorElem {
    std::size_t dim = 0;
    int legs = 1;
    std::vector<std::pair<std::int64_t, FieldElement>> terms;

    void normalize();
    bool is_zero() const { return terms.empty(); }
    bool operator==(const TensorElem& o) const;
    std::array<std::int64_t, 8> digits(std::int64_t index) const;  // leg indices
};

class HopfAlgebra;

TensorElem tensor_from_vec(const Vec& v);
Vec tensor_to_vec(const TensorElem& t, const FieldDescriptor& f);
TensorElem tensor_unit(const HopfAlgebra& h, int legs);
TensorElem tensor_add(const TensorElem& a, const TensorElem& b);
TensorElem tensor_sub(const TensorElem& a, const TensorElem& b);
TensorElem tensor_scale(const TensorElem& a, const FieldElement& c);
/// componentwise product in the tensor-power algebra
TensorElem tensor_mul(const HopfAlgebra& h, const TensorElem& a, const TensorElem& b);
TensorElem tensor_outer(const TensorElem& a, const TensorElem& b);
TensorElem tensor_apply_leg(const TensorElem& a, const Matrix& m, int leg);
/// expand one leg through Delta (legs + 1)
TensorElem tensor_comult_leg(const HopfAlgebra& h, const TensorElem& a, int leg);
/// merge legs (leg, leg+1) through the product (legs - 1)
TensorElem tensor_mult_legs(const HopfAlgebra& h, const TensorElem& a, int leg);
/// contract one leg with the counit (legs - 1)
TensorElem tensor_counit_leg(const HopfAlgebra& h, const TensorElem& a, int leg);
/// swap two legs
TensorElem tensor_swap_legs(const TensorElem& a, int leg1, int leg2);

/// A finite-dimensional Hopf algebra given by dense structure-constant tensors
/// plus cached nonzero views. Immutable after finalize().
class HopfAlgebra {
public:
    HopfAlgebra(FieldDescriptor f, std::size_t dim);

    FieldDescriptor field;
    std::size_t dim;
    std::vector<std::string> basis_names;
    std::vector<FieldElement> mult;    // [(i*dim + j)*dim + k]: coeff of e_k in e_i e_j
    Vec unit;                          // coordinates of 1
    std::vector<FieldElement> comult;  // [(i*dim + j)*dim + k]: coeff of e_j (x) e_k in Delta(e_i)
    Vec counit;                        // row
    Matrix antipode;                   // S; 0x0 while undetermined
    Matrix antipode_inverse;
    SparseViews views;

    const FieldElement& mult_at(std::size_t i, std::size_t j, std::size_t k) const {
        return mult[(i * dim + j) * dim + k];
    }
    FieldElement& mult_at(std::size_t i, std::size_t j, std::size_t k) {
        return mult[(i * dim + j) * dim + k];
    }
    const FieldElement& comult_at(std::size_t i, std::size_t j, std::size_t k) const {
        return comult[(i * dim + j) * dim + k];
    }
    FieldElement& comult_at(std::size_t i, std::size_t j, std::size_t k) {
        return comult[(i * dim + j) * dim + k];
    }

    bool has_antipode() const { return antipode.rows() == dim && dim > 0; }
    /// Rebuild the nonzero views after the tensors are filled in.
    void finalize();

    Vec basis_vector(std::size_t i) const;
    Vec multiply(const Vec& a, const Vec& b) const;
    TensorElem comult_elem(const Vec& v) const;
    FieldElement counit_of(const Vec& v) const;
    bool is_grouplike(const Vec& v) const;

    /// u . eps as a matrix (the convolution unit).
    Matrix u_eps() const;
    /// (S^2)^i, negative i through the inverse.
    Matrix s2_power(std::int64_t i) const;
    /// T_n^{(i)} = m_n . (id (x) S^{2i} (x) ... (x) S^{2(n-1)i}) . Delta_n via the
    /// convolution recursion T_{k+1} = m . (id (x) S^{2i} T_k) . Delta.
    Matrix twisted_power_map(std::int64_t i, std::int64_t n) const;
    /// One recursion step with an arbitrary algebra-map matrix in place of S^{2i}.
    Matrix power_step(const Matrix& a, const Matrix& t) const;
    /// Convolution product of two endomorphisms: m . (F (x) G) . Delta.
    Matrix convolve(const Matrix& f, const Matrix& g) const;

    /// Multiplicative order of S^2 (finite for every verified Hopf algebra).
    std::int64_t s2_order() const;
};

struct AxiomReport {
    struct Entry {
        std::string name;
        bool pass;
        std::optional<std::array<int, 3>> witness;
    };
    std::vector<Entry> entries;
    bool all_pass() const;
    std::string summary() const;
};

/// Exact verification of every defining identity; failures carry a witness
/// basis-index triple.
AxiomReport verify_axioms(const HopfAlgebra& h);

/// Throws Errc::AxiomViolation unless all axioms hold.
void require_axioms(const HopfAlgebra& h, const std::string& context);

/// Antipode as the convolution inverse of the identity; Errc::NoAntipode when
/// the bialgebra is not Hopf.
Matrix derive_antipode(const HopfAlgebra& h);

/// Direct n-fold expansion of the twisted Sweedler power applied to an element
/// (test oracle for twisted_power_map; exponential in n).
Vec sweedler_power_direct(const HopfAlgebra& h, std::int64_t i, std::int64_t n, const Vec& v);

HopfAlgebra dual(const HopfAlgebra& h);
HopfAlgebra opposite(const HopfAlgebra& h);
HopfAlgebra coopposite(const HopfAlgebra& h);
HopfAlgebra tensor_product(const HopfAlgebra& a, const HopfAlgebra& b);

/// Hopf subalgebra on an explicit basis (columns must span a subalgebra closed
/// under Delta and S); returns the algebra together with the inclusion matrix.
std::pair<HopfAlgebra, Matrix> sub_hopf_algebra(const HopfAlgebra& h, const std::vector<Vec>& basis);

bool is_algebra_map(const HopfAlgebra& dom, const HopfAlgebra& cod, const Matrix& m);
bool is_coalgebra_map(const HopfAlgebra& dom, const HopfAlgebra& cod, const Matrix& m);
bool is_hopf_map(const HopfAlgebra& dom, const HopfAlgebra& cod, const Matrix& m);

}  // namespace hopfexp
