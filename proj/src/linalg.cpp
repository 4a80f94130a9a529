#include "operadforge/linalg.hpp"

#include <stdexcept>

namespace operadforge {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
    if (a == 0) return;
    for (const auto& [i, xi] : x) {
        auto it = y.find(i);
        if (it == y.end()) {
            y.emplace(i, a * xi);
        } else {
            it->second += a * xi;
            if (it->second == 0) y.erase(it);
        }
    }
}

SparseVector scaled(const SparseVector& x, const Rational& a) {
    SparseVector out;
    if (a == 0) return out;
    for (const auto& [i, xi] : x) out.emplace(i, a * xi);
    return out;
}

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

RationalMatrix RationalMatrix::from_rows(int cols, const std::vector<SparseVector>& rows) {
    RationalMatrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : rows[r]) m.set(r, c, v);
    return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& d) {
    int cols = d.empty() ? 0 : static_cast<int>(d[0].size());
    RationalMatrix m(static_cast<int>(d.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(d[r].size()) != cols) throw std::invalid_argument("ragged matrix");
        for (int c = 0; c < cols; ++c) m.set(r, c, d[r][c]);
    }
    return m;
}

Rational RationalMatrix::get(int r, int c) const {
    const auto& row = data_.at(r);
    auto it = row.find(c);
    return it == row.end() ? Rational(0) : it->second;
}

void RationalMatrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    if (v == 0)
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void RationalMatrix::add(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    if (v == 0) return;
    auto& row = data_[r];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second == 0) row.erase(it);
    }
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [k, v] : data_[r]) axpy(p.data_[r], v, o.data_[k]);
    return p;
}

SparseVector RationalMatrix::apply(const SparseVector& v) const {
    SparseVector out;
    for (int r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (const auto& [c, x] : data_[r]) {
            auto it = v.find(c);
            if (it != v.end()) acc += x * it->second;
        }
        if (acc != 0) out.emplace(r, acc);
    }
    return out;
}

bool RationalMatrix::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

std::size_t RationalMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
}

std::vector<std::tuple<int, int, Rational>> RationalMatrix::triplets() const {
    std::vector<std::tuple<int, int, Rational>> out;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) out.emplace_back(r, c, v);
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool EchelonBasis::insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    auto [pivot, lead] = *v.begin();
    Rational inv = 1 / lead;
    for (auto& [i, x] : v) x *= inv;
    for (auto& [col, row] : pivot_rows_) {
        auto it = row.find(pivot);
        if (it != row.end()) {
            Rational f = -it->second;
            axpy(row, f, v);
        }
    }
    pivot_rows_.emplace(pivot, std::move(v));
    return true;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
    // Pivot rows are fully reduced, so one pass in column order suffices.
    auto it = v.begin();
    while (it != v.end()) {
        auto p = pivot_rows_.find(it->first);
        if (p == pivot_rows_.end()) {
            ++it;
            continue;
        }
        int col = it->first;
        Rational f = -it->second;
        axpy(v, f, p->second);
        it = v.upper_bound(col);
    }
    return v;
}

Subspace EchelonBasis::subspace() const {
    Subspace s;
    s.ambient_dim = ambient_;
    for (const auto& [col, row] : pivot_rows_) s.basis.push_back(row);
    return s;
}

RrefResult rref(const RationalMatrix& m) {
    EchelonBasis eb(m.cols());
    for (int r = 0; r < m.rows(); ++r) eb.insert(m.row(r));
    RrefResult res;
    res.rank = eb.rank();
    res.echelon = RationalMatrix(m.rows(), m.cols());
    int r = 0;
    for (const auto& [col, row] : eb.pivot_rows()) {
        res.pivots.push_back(col);
        for (const auto& [c, v] : row) res.echelon.set(r, c, v);
        ++r;
    }
    return res;
}

int rank(const RationalMatrix& m) {
    EchelonBasis eb(m.cols());
    for (int r = 0; r < m.rows(); ++r) eb.insert(m.row(r));
    return eb.rank();
}

Subspace kernel(const RationalMatrix& m) {
    EchelonBasis eb(m.cols());
    for (int r = 0; r < m.rows(); ++r) eb.insert(m.row(r));
    const auto& piv = eb.pivot_rows();
    std::vector<SparseVector> vecs;
    for (int free = 0; free < m.cols(); ++free) {
        if (piv.count(free)) continue;
        SparseVector v;
        v.emplace(free, 1);
        for (const auto& [col, row] : piv) {
            auto it = row.find(free);
            if (it != row.end()) v.emplace(col, -it->second);
        }
        vecs.push_back(std::move(v));
    }
    return span(m.cols(), vecs);
}

Subspace image(const RationalMatrix& m) {
    RationalMatrix t = m.transpose();
    EchelonBasis eb(m.rows());
    for (int r = 0; r < t.rows(); ++r) eb.insert(t.row(r));
    return eb.subspace();
}

Subspace span(int ambient_dim, const std::vector<SparseVector>& vectors) {
    EchelonBasis eb(ambient_dim);
    for (const auto& v : vectors) eb.insert(v);
    return eb.subspace();
}

Subspace full_space(int n) {
    Subspace s;
    s.ambient_dim = n;
    for (int i = 0; i < n; ++i) s.basis.push_back(SparseVector{{i, Rational(1)}});
    return s;
}

bool Subspace::contains(const SparseVector& v) const {
    EchelonBasis eb(ambient_dim);
    for (const auto& b : basis) eb.insert(b);
    return eb.contains(v);
}

bool Subspace::contains(const Subspace& o) const {
    EchelonBasis eb(ambient_dim);
    for (const auto& b : basis) eb.insert(b);
    for (const auto& v : o.basis)
        if (!eb.contains(v)) return false;
    return true;
}

Subspace annihilator(const Subspace& s, const RationalMatrix& pairing) {
    if (pairing.cols() != s.ambient_dim)
        throw std::invalid_argument("annihilator: pairing does not match subspace ambient");
    // Constraint rows: (pairing * s_j)^T, one per basis vector of s.
    std::vector<SparseVector> rows;
    for (const auto& b : s.basis) rows.push_back(pairing.apply(b));
    return kernel(RationalMatrix::from_rows(pairing.rows(), rows));
}

HomologyResult homology(const RationalMatrix& d_k, const RationalMatrix& d_k_plus_1) {
    if (d_k.cols() != d_k_plus_1.rows())
        throw std::invalid_argument("homology: maps are not composable");
    if (!(d_k * d_k_plus_1).is_zero())
        throw std::domain_error("homology: d_k * d_(k+1) is not zero");
    Subspace ker = kernel(d_k);
    Subspace im = image(d_k_plus_1);
    EchelonBasis eb(d_k.cols());
    for (const auto& v : im.basis) eb.insert(v);
    std::vector<SparseVector> reps;
    for (const auto& v : ker.basis)
        if (eb.insert(v)) reps.push_back(v);
    HomologyResult h;
    h.betti = ker.dim() - im.dim();
    h.representatives.ambient_dim = d_k.cols();
    h.representatives.basis = std::move(reps);
    return h;
}

nlohmann::ordered_json to_json(const RationalMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [r, c, v] : m.triplets()) entries.push_back({r, c, to_string(v)});
    j["entries"] = entries;
    return j;
}

RationalMatrix matrix_from_json(const nlohmann::ordered_json& j) {
    RationalMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.at("entries")) {
        const auto& v = e.at(2);
        Rational q = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
        m.set(e.at(0).get<int>(), e.at(1).get<int>(), q);
    }
    return m;
}

}  // namespace operadforge
