#pragma once

// Finite-dimensional representations of A~_n over Q, given by the images of
// the Coxeter generators, and their characters.

#include "aspectra/matrix.hpp"
#include "aspectra/rng.hpp"
#include "aspectra/words.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace aspectra {

class MatrixRep {
public:
    /// images[i-1] is the image of a_i.  Throws InvalidRepresentation unless
    /// every image is square, invertible and the Coxeter relations hold.
    MatrixRep(int rank, std::vector<Matrix> images, std::string name);

    int rank() const noexcept { return rank_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::string& name() const noexcept { return name_; }
    const Matrix& image(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    /// rho(g_j^sign), computed from the defining word of g_j.
    const Matrix& lattice_image(int j, int sign = 1) const;
    const Matrix& letter_image(const Letter& letter) const;

    /// Product of letter images, g-letters through lattice_image.
    Matrix eval(const Word& word) const;
    /// Same product with every g-letter first expanded into a-letters.
    Matrix eval_expanded(const Word& word) const;

    /// Installs direct images for g_1..g_n (e.g. the identity for reps of the
    /// finite quotient).  Throws InvalidRepresentation if they disagree with
    /// the images derived from the defining words.
    void set_lattice_images(std::vector<Matrix> images);

private:
    void validate() const;

    int rank_;
    std::size_t dim_;
    std::string name_;
    std::vector<Matrix> images_;
    std::vector<Matrix> lattice_;
    std::vector<Matrix> lattice_inverse_;
};

Rational character(const MatrixRep& rho, const Word& word);

/// The geometric representation: a_i e_j = e_j - 2B(e_i, e_j) e_i with
/// B = 1 on the diagonal and -1/2 on cycle-adjacent pairs.
MatrixRep tits_rep(int n);

enum class QuotientRep { Trivial, Sign, Standard, Natural, Regular };

/// Matrix of a permutation of 1..m in the given S_m representation.
Matrix quotient_matrix(const std::vector<int>& perm, QuotientRep kind);

/// Lift of an S_{n+1} representation through the quotient by N: a_i maps to
/// the transposition (i, i+1) for i <= n and a_{n+1} to (1, n+1).
MatrixRep perm_quotient_rep(int n, QuotientRep kind);
/// Names: trivial, sign, standard, natural, regular.
MatrixRep perm_quotient_rep(int n, std::string_view name);

MatrixRep direct_sum(const MatrixRep& r, const MatrixRep& s);
MatrixRep tensor(const MatrixRep& r, const MatrixRep& s);
/// Images C^-1 rho(a_i) C.
MatrixRep conjugate(const MatrixRep& r, const Matrix& c);

/// Integer matrix of determinant +-1: a product of random elementary
/// operations applied to the identity.
Matrix random_unimodular(std::size_t dim, Rng& rng);
/// Invertible matrix with small random rational entries.
Matrix random_invertible(std::size_t dim, Rng& rng);

/// tits | perm:NAME | sum(spec,...) | tensor(spec,spec) | conj(spec,seed=K)
MatrixRep parse_rep_spec(std::string_view text, int n);

/// tits, trivial, sign, standard, and trivial + sign + standard.
std::vector<MatrixRep> battery(int n);

} // namespace aspectra
