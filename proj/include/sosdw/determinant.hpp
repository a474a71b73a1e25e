#pragma once

#include "sosdw/coeffs.hpp"

namespace sosdw {

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularNormalization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComplexMatrix {
    int n = 0;
    std::vector<cplx> a;
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim)
        : n(dim), a(static_cast<size_t>(dim) * static_cast<size_t>(dim)) {}
    cplx& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    const cplx& at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }
};

// Determinant by LU decomposition with partial pivoting.
cplx det(ComplexMatrix m);

int omega_dim(int L);  // (L*(L+1) + 2) / 2

// Row labels (0,0) [the base equation], (0,m), (l,m) with 1 <= l < m <= L,
// in that order.
std::vector<std::pair<int, int>> eq_labels(int L);
int row_map(int i, int j, int L);  // 1-based row of label (i,j)
int col_map(int k, int l, int L);  // 1-based offset of R(k,l) among the R columns

// Unfolded-system matrix whose first column holds the substituted partition
// function of interest: k = 0 keeps the base set X, k >= 1 selects X_k^0.
ComplexMatrix build_omega(EquationType t, int k, const VariableTuple& vt);

// det of the omega matrix: the linear-system value attached to X_i^0.
cplx h_fund(EquationType t, int i, const VariableTuple& vt);

// h_fund conjugated by the exchange of slots 0 and beta.
cplx h_sys(EquationType t, int alpha, int beta, const VariableTuple& vt);

// Which entries of W receive the inhomogeneous column when forming W_i.
enum class SubstReading { Row, Column };

struct WSet {
    ComplexMatrix w0;
    std::vector<ComplexMatrix> wi;  // W_1..W_L
    cplx det_w0;
};

// Assembles W_0 with entries h_sys(alpha, beta) and the L substituted
// matrices W_i; throws SingularSystem when |det W_0| falls under the
// entry-scaled guard.
WSet build_w(EquationType t, const VariableTuple& vt,
             SubstReading reading = SubstReading::Row);

// |d| over the Hadamard row bound of m: a scale-free nearness-to-singularity
// measure for a matrix with determinant d (1 = orthogonal rows, 0 = singular).
double det_hadamard_ratio(const ComplexMatrix& m, const cplx& d);

int rep_p(int L);  // L^2 (L+1) / 2
int rep_q(int L);  // (L-1)(L^2 + 2) / 2

// Determinantal value of the partition function on X_i^0 (i = 0 gives the
// base set X).
cplx rep_partition(EquationType t, int i, const VariableTuple& vt);

// Hand-expanded reference matrices for L = 1 and L = 2 and the worst
// deviation between their determinant ratios and the assembled ones.
ComplexMatrix reference_w0(int L, EquationType t, const VariableTuple& vt);
double golden_check(int L, EquationType t, const VariableTuple& vt);

}  // namespace sosdw
