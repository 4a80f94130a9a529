#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace operadforge {

using Rational = mpq_class;

// Sparse vector: index -> nonzero coefficient.
using SparseVector = std::map<int, Rational>;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Rational& a);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);
    static RationalMatrix from_rows(int cols, const std::vector<SparseVector>& rows);
    static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational get(int r, int c) const;
    void set(int r, int c, const Rational& v);
    void add(int r, int c, const Rational& v);
    const SparseVector& row(int r) const { return data_.at(r); }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    SparseVector apply(const SparseVector& v) const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    std::vector<std::tuple<int, int, Rational>> triplets() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVector> data_;
};

struct Subspace {
    int ambient_dim = 0;
    std::vector<SparseVector> basis;  // reduced row echelon, pivots normalized to 1

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const SparseVector& v) const;
    bool contains(const Subspace& o) const;
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim == b.ambient_dim && a.basis == b.basis;
    }
};

// Incremental reduced row echelon form. Stays fully reduced after every insert,
// so the basis it holds is canonical for the span.
class EchelonBasis {
public:
    explicit EchelonBasis(int ambient_dim) : ambient_(ambient_dim) {}

    // Returns true if v was independent of what is already stored.
    bool insert(SparseVector v);
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(pivot_rows_.size()); }
    Subspace subspace() const;
    const std::map<int, SparseVector>& pivot_rows() const { return pivot_rows_; }

private:
    int ambient_;
    std::map<int, SparseVector> pivot_rows_;  // pivot column -> row
};

struct RrefResult {
    RationalMatrix echelon;
    int rank = 0;
    std::vector<int> pivots;
};

RrefResult rref(const RationalMatrix& m);
int rank(const RationalMatrix& m);
Subspace kernel(const RationalMatrix& m);
Subspace image(const RationalMatrix& m);
Subspace span(int ambient_dim, const std::vector<SparseVector>& vectors);
Subspace full_space(int n);

// {v : <v, s> = 0 for all s}, where <v, s> = v^T * pairing * s.
Subspace annihilator(const Subspace& s, const RationalMatrix& pairing);

struct HomologyResult {
    int betti = 0;
    Subspace representatives;
};

// Homology at the middle of  . --d_k_plus_1--> C_k --d_k--> .
HomologyResult homology(const RationalMatrix& d_k, const RationalMatrix& d_k_plus_1);

nlohmann::ordered_json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::ordered_json& j);

}  // namespace operadforge
