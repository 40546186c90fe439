#include "rank2qi/f2.hpp"

#include <bit>
#include <stdexcept>

namespace rank2qi {

namespace {

std::uint64_t mask_for(unsigned size)
{
    return size == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
}

struct Reduced {
    std::vector<std::uint64_t> rows;  // reduced row echelon form
    std::vector<bool> rhs;
    std::vector<int> pivot_col;       // per nonzero row
};

Reduced rref(const F2Matrix& m, const F2Vector* v)
{
    Reduced red;
    for (unsigned r = 0; r < m.rows(); ++r) {
        red.rows.push_back(m.row(r).bits());
        red.rhs.push_back(v ? (*v)[r] : false);
    }
    unsigned lead = 0;
    for (unsigned c = 0; c < m.cols() && lead < red.rows.size(); ++c) {
        std::uint64_t bit = std::uint64_t{1} << c;
        unsigned p = lead;
        while (p < red.rows.size() && !(red.rows[p] & bit)) ++p;
        if (p == red.rows.size()) continue;
        std::swap(red.rows[p], red.rows[lead]);
        std::swap(red.rhs[p], red.rhs[lead]);
        for (unsigned r = 0; r < red.rows.size(); ++r) {
            if (r != lead && (red.rows[r] & bit)) {
                red.rows[r] ^= red.rows[lead];
                red.rhs[r] = red.rhs[r] != red.rhs[lead];
            }
        }
        red.pivot_col.push_back(static_cast<int>(c));
        ++lead;
    }
    return red;
}

}  // namespace

F2Vector::F2Vector(unsigned size, std::uint64_t bits) : size_(size), bits_(bits)
{
    if (size > kMaxF2Dim) throw std::invalid_argument("F2Vector longer than 64");
    bits_ &= mask_for(size);
}

F2Vector F2Vector::ones(unsigned size)
{
    return F2Vector(size, mask_for(size));
}

F2Vector F2Vector::from_string(const std::string& bits)
{
    F2Vector v(static_cast<unsigned>(bits.size()));
    for (unsigned j = 0; j < bits.size(); ++j) {
        if (bits[j] != '0' && bits[j] != '1')
            throw std::invalid_argument("bad bit string '" + bits + "'");
        v.set(j, bits[j] == '1');
    }
    return v;
}

void F2Vector::set(unsigned j, bool v)
{
    if (j >= size_) throw std::out_of_range("F2Vector index");
    std::uint64_t bit = std::uint64_t{1} << j;
    bits_ = v ? (bits_ | bit) : (bits_ & ~bit);
}

unsigned F2Vector::weight() const
{
    return static_cast<unsigned>(std::popcount(bits_));
}

F2Vector& F2Vector::operator+=(const F2Vector& o)
{
    if (size_ != o.size_) throw std::invalid_argument("F2Vector size mismatch");
    bits_ ^= o.bits_;
    return *this;
}

std::string F2Vector::to_string() const
{
    std::string s(size_, '0');
    for (unsigned j = 0; j < size_; ++j)
        if ((*this)[j]) s[j] = '1';
    return s;
}

F2Matrix::F2Matrix(unsigned rows, unsigned cols) : cols_(cols), rows_(rows, F2Vector(cols)) {}

F2Matrix F2Matrix::identity(unsigned n)
{
    F2Matrix m(n, n);
    for (unsigned j = 0; j < n; ++j) m.set(j, j, true);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::string>& rows)
{
    if (rows.empty()) return {};
    F2Matrix m(static_cast<unsigned>(rows.size()), static_cast<unsigned>(rows[0].size()));
    for (unsigned r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged F2 matrix");
        m.rows_[r] = F2Vector::from_string(rows[r]);
    }
    return m;
}

F2Vector F2Matrix::operator*(const F2Vector& x) const
{
    if (x.size() != cols_) throw std::invalid_argument("F2Matrix * F2Vector size mismatch");
    F2Vector y(rows());
    for (unsigned r = 0; r < rows(); ++r)
        y.set(r, std::popcount(rows_[r].bits() & x.bits()) & 1);
    return y;
}

bool F2Matrix::is_symmetric() const
{
    if (rows() != cols_) return false;
    for (unsigned r = 0; r < rows(); ++r)
        for (unsigned c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

unsigned F2Matrix::rank() const
{
    return static_cast<unsigned>(rref(*this, nullptr).pivot_col.size());
}

std::vector<std::string> F2Matrix::to_strings() const
{
    std::vector<std::string> out;
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
}

std::vector<F2Vector> f2_kernel(const F2Matrix& m)
{
    Reduced red = rref(m, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : red.pivot_col) is_pivot[c] = true;
    std::vector<F2Vector> basis;
    for (unsigned f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        F2Vector x(m.cols());
        x.set(f, true);
        for (unsigned r = 0; r < red.pivot_col.size(); ++r)
            if ((red.rows[r] >> f) & 1U) x.set(static_cast<unsigned>(red.pivot_col[r]), true);
        basis.push_back(x);
    }
    return basis;
}

std::optional<F2Solution> f2_solve(const F2Matrix& m, const F2Vector& v)
{
    if (v.size() != m.rows()) throw std::invalid_argument("f2_solve: dimension mismatch");
    Reduced red = rref(m, &v);
    for (size_t r = red.pivot_col.size(); r < red.rows.size(); ++r)
        if (red.rhs[r]) return std::nullopt;
    F2Vector x(m.cols());
    for (unsigned r = 0; r < red.pivot_col.size(); ++r)
        x.set(static_cast<unsigned>(red.pivot_col[r]), red.rhs[r]);
    return F2Solution{x, f2_kernel(m)};
}

std::vector<F2Vector> F2Solution::enumerate() const
{
    std::vector<F2Vector> out = f2_span(kernel, particular.size());
    for (auto& x : out) x += particular;
    return out;
}

std::vector<F2Vector> f2_span(const std::vector<F2Vector>& basis, unsigned size)
{
    if (basis.size() > 24) throw std::length_error("f2_span: span too large to enumerate");
    std::vector<F2Vector> out;
    F2Vector cur(size);
    out.push_back(cur);
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << basis.size()); ++k) {
        cur += basis[std::countr_zero(k)];
        out.push_back(cur);
    }
    return out;
}

unsigned f2_rank(const std::vector<F2Vector>& vectors)
{
    if (vectors.empty()) return 0;
    F2Matrix m(static_cast<unsigned>(vectors.size()), vectors[0].size());
    for (unsigned r = 0; r < vectors.size(); ++r)
        for (unsigned c = 0; c < m.cols(); ++c) m.set(r, c, vectors[r][c]);
    return m.rank();
}

}  // namespace rank2qi
