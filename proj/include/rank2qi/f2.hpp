#ifndef RANK2QI_F2_HPP_
#define RANK2QI_F2_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rank2qi {

inline constexpr unsigned kMaxF2Dim = 64;

/* Vector over F2 of length <= 64, bit j = coordinate j. */
class F2Vector {
  public:
    F2Vector() = default;
    explicit F2Vector(unsigned size, std::uint64_t bits = 0);
    static F2Vector ones(unsigned size);
    static F2Vector from_string(const std::string& bits);

    unsigned size() const { return size_; }
    std::uint64_t bits() const { return bits_; }
    bool operator[](unsigned j) const { return (bits_ >> j) & 1U; }
    void set(unsigned j, bool v);
    bool is_zero() const { return bits_ == 0; }
    unsigned weight() const;

    F2Vector& operator+=(const F2Vector& o);
    friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a += b; }
    friend bool operator==(const F2Vector&, const F2Vector&) = default;

    /* "1010", coordinate 0 first */
    std::string to_string() const;

  private:
    unsigned size_ = 0;
    std::uint64_t bits_ = 0;
};

class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(unsigned rows, unsigned cols);
    static F2Matrix identity(unsigned n);
    static F2Matrix from_rows(const std::vector<std::string>& rows);

    unsigned rows() const { return static_cast<unsigned>(rows_.size()); }
    unsigned cols() const { return cols_; }
    bool get(unsigned r, unsigned c) const { return rows_[r][c]; }
    void set(unsigned r, unsigned c, bool v) { rows_[r].set(c, v); }
    const F2Vector& row(unsigned r) const { return rows_[r]; }

    F2Vector operator*(const F2Vector& x) const;
    bool is_symmetric() const;
    unsigned rank() const;

    std::vector<std::string> to_strings() const;
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

  private:
    unsigned cols_ = 0;
    std::vector<F2Vector> rows_;
};

/* Basis of {x : Mx = 0}. */
std::vector<F2Vector> f2_kernel(const F2Matrix& m);

/* Solution set particular + span(kernel) of Mx = v. */
struct F2Solution {
    F2Vector particular;
    std::vector<F2Vector> kernel;

    std::vector<F2Vector> enumerate() const;
};

std::optional<F2Solution> f2_solve(const F2Matrix& m, const F2Vector& v);

/* All 2^k elements of span(basis), in Gray-code order starting from 0. */
std::vector<F2Vector> f2_span(const std::vector<F2Vector>& basis, unsigned size);

/* Dimension of the span of the given vectors. */
unsigned f2_rank(const std::vector<F2Vector>& vectors);

}  // namespace rank2qi

#endif /* RANK2QI_F2_HPP_ */
