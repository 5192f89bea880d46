#pragma once

// The symmetric group S_r as a Coxeter group: one-line permutations, lengths,
// descents, Bruhat order, Young subgroups, distinguished coset representatives
// and the double coset <-> matrix bijection.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qss {

/// A composition of r: a sequence of nonnegative parts (zero parts allowed).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("composition with a negative part");
    }
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_.at(i); }
    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// First position (1-based) of block k (0-based), i.e. 1 + sum of earlier parts.
    int block_start(std::size_t k) const {
        int s = 1;
        for (std::size_t i = 0; i < k; ++i) s += parts_[i];
        return s;
    }

    /// Block index (0-based) containing 1-based position p.
    std::size_t block_of(int p) const {
        int acc = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            acc += parts_[i];
            if (p <= acc) return i;
        }
        throw std::out_of_range("position outside composition");
    }

    /// The simple reflections s_k (k = 1..r-1) lying in the Young subgroup.
    std::vector<int> generators() const {
        std::vector<int> g;
        int pos = 0;
        for (int p : parts_) {
            for (int k = pos + 1; k < pos + p; ++k) g.push_back(k);
            pos += p;
        }
        return g;
    }

    /// Length of the longest element of the Young subgroup.
    int longest_length() const {
        int l = 0;
        for (int p : parts_) l += p * (p - 1) / 2;
        return l;
    }

    bool is_partition() const { return std::is_sorted(parts_.rbegin(), parts_.rend()); }

    /// Drop trailing zero parts (used only where a partition is expected).
    Composition trimmed() const {
        std::vector<int> p = parts_;
        while (!p.empty() && p.back() == 0) p.pop_back();
        return Composition(p);
    }

    Composition transpose() const {
        Composition t = trimmed();
        if (!t.is_partition()) throw std::invalid_argument("transpose of a non-partition");
        std::vector<int> out;
        if (t.size() == 0) return Composition(out);
        for (int c = 1; c <= t.parts_[0]; ++c) {
            int h = 0;
            for (int p : t.parts_)
                if (p >= c) ++h;
            out.push_back(h);
        }
        return Composition(out);
    }

    friend auto operator<=>(const Composition&, const Composition&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

/// lambda v mu: concatenation.
inline Composition join(const Composition& a, const Composition& b) {
    std::vector<int> p = a.parts();
    p.insert(p.end(), b.parts().begin(), b.parts().end());
    return Composition(p);
}

/// Dominance order on partitions (padded with zeros): a >= b.
inline bool dominates(const Composition& a, const Composition& b) {
    int sa = 0, sb = 0;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

/// Permutation of {1..r} in one-line notation w = (w(1),...,w(r)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size() + 1, false);
        for (int x : img_) {
            if (x < 1 || x > static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("not a permutation");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    static Permutation identity(int r) {
        std::vector<int> v(static_cast<std::size_t>(r));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v), Unchecked{});
    }
    /// The simple transposition s_k = (k, k+1) in S_r.
    static Permutation simple(int r, int k) {
        Permutation p = identity(r);
        p.swap_positions(k);
        return p;
    }

    int rank() const noexcept { return static_cast<int>(img_.size()); }
    const std::vector<int>& images() const noexcept { return img_; }
    int operator()(int k) const { return img_[static_cast<std::size_t>(k - 1)]; }

    /// (x*y)(k) = x(y(k)).
    friend Permutation operator*(const Permutation& x, const Permutation& y) {
        if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
        std::vector<int> v(y.img_.size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = x.img_[static_cast<std::size_t>(y.img_[k] - 1)];
        return Permutation(std::move(v), Unchecked{});
    }

    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (std::size_t k = 0; k < v.size(); ++k) v[static_cast<std::size_t>(img_[k] - 1)] = static_cast<int>(k) + 1;
        return Permutation(std::move(v), Unchecked{});
    }

    /// w * s_k (swap positions k, k+1).
    Permutation right_mult(int k) const {
        Permutation p = *this;
        p.swap_positions(k);
        return p;
    }
    /// s_k * w (swap values k, k+1).
    Permutation left_mult(int k) const {
        Permutation p = *this;
        for (int& x : p.img_) {
            if (x == k) x = k + 1;
            else if (x == k + 1) x = k;
        }
        return p;
    }

    int length() const {
        int l = 0;
        for (std::size_t i = 0; i < img_.size(); ++i)
            for (std::size_t j = i + 1; j < img_.size(); ++j)
                if (img_[i] > img_[j]) ++l;
        return l;
    }

    bool has_right_descent(int k) const { return (*this)(k) > (*this)(k + 1); }
    bool has_left_descent(int k) const {
        // k+1 occurs before k
        for (int x : img_) {
            if (x == k) return false;
            if (x == k + 1) return true;
        }
        return false;
    }
    std::vector<int> right_descents() const {
        std::vector<int> d;
        for (int k = 1; k < rank(); ++k)
            if (has_right_descent(k)) d.push_back(k);
        return d;
    }
    std::vector<int> left_descents() const { return inverse().right_descents(); }

    /// A reduced word (s_{k_1} ... s_{k_l}) with w = s_{k_1} ... s_{k_l}.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        Permutation w = *this;
        while (true) {
            int k = 1;
            while (k < w.rank() && !w.has_right_descent(k)) ++k;
            if (k >= w.rank()) break;
            word.push_back(k);
            w.swap_positions(k);
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    bool is_identity() const {
        for (std::size_t k = 0; k < img_.size(); ++k)
            if (img_[k] != static_cast<int>(k) + 1) return false;
        return true;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < img_.size(); ++i) s += (i ? "," : "") + std::to_string(img_[i]);
        return s + ")";
    }

private:
    struct Unchecked {};
    Permutation(std::vector<int> v, Unchecked) : img_(std::move(v)) {}
    void swap_positions(int k) {
        if (k < 1 || k >= rank()) throw std::out_of_range("simple reflection index");
        std::swap(img_[static_cast<std::size_t>(k - 1)], img_[static_cast<std::size_t>(k)]);
    }

    std::vector<int> img_;
};

inline int length(const Permutation& w) { return w.length(); }

/// Bruhat order via the sorted-prefix (Ehresmann tableau) criterion.
inline bool bruhat_leq(const Permutation& x, const Permutation& y) {
    if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch");
    const int r = x.rank();
    std::vector<int> a, b;
    for (int i = 1; i < r; ++i) {
        a.insert(std::upper_bound(a.begin(), a.end(), x(i)), x(i));
        b.insert(std::upper_bound(b.begin(), b.end(), y(i)), y(i));
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] > b[j]) return false;
    }
    return true;
}

/// All permutations of S_r in lexicographic order of their one-line notation.
inline std::vector<Permutation> all_permutations(int r) {
    std::vector<int> v(static_cast<std::size_t>(r));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Elements of the Young subgroup S_lambda (permutations preserving each block).
inline std::vector<Permutation> young_subgroup(const Composition& lambda) {
    std::vector<std::vector<int>> acc{{}};
    int start = 0;
    for (int p : lambda.parts()) {
        std::vector<int> block(static_cast<std::size_t>(p));
        std::iota(block.begin(), block.end(), start + 1);
        std::vector<std::vector<int>> next;
        for (const auto& prefix : acc) {
            std::vector<int> b = block;
            do {
                std::vector<int> v = prefix;
                v.insert(v.end(), b.begin(), b.end());
                next.push_back(std::move(v));
            } while (std::next_permutation(b.begin(), b.end()));
        }
        acc = std::move(next);
        start += p;
    }
    std::vector<Permutation> out;
    out.reserve(acc.size());
    for (auto& v : acc) out.emplace_back(std::move(v));
    std::sort(out.begin(), out.end());
    return out;
}

/// Longest element of S_lambda: reverses each block.
inline Permutation longest_element(const Composition& lambda) {
    std::vector<int> v;
    int start = 0;
    for (int p : lambda.parts()) {
        for (int i = p; i >= 1; --i) v.push_back(start + i);
        start += p;
    }
    return Permutation(v);
}

/// s w > w for every simple reflection s of S_lambda (w is minimal in S_lambda w).
inline bool is_min_left(const Composition& lambda, const Permutation& w) {
    for (int k : lambda.generators())
        if (w.has_left_descent(k)) return false;
    return true;
}
/// s w < w for every simple reflection of S_lambda.
inline bool is_max_left(const Composition& lambda, const Permutation& w) {
    for (int k : lambda.generators())
        if (!w.has_left_descent(k)) return false;
    return true;
}
/// w s > w for every simple reflection of S_rho.
inline bool is_min_right(const Permutation& w, const Composition& rho) {
    for (int k : rho.generators())
        if (w.has_right_descent(k)) return false;
    return true;
}
inline bool is_max_right(const Permutation& w, const Composition& rho) {
    for (int k : rho.generators())
        if (!w.has_right_descent(k)) return false;
    return true;
}

enum class CosetVariant { min, max };

/// D_lambda (minimal) or D_lambda^+ (maximal) representatives of the right cosets S_lambda w.
inline std::vector<Permutation> coset_reps(const Composition& lambda, CosetVariant variant) {
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(lambda.total()))
        if (variant == CosetVariant::min ? is_min_left(lambda, w) : is_max_left(lambda, w)) out.push_back(w);
    return out;
}

/// Minimal double coset representatives D_{nu,rho}.
inline bool is_min_double(const Composition& nu, const Permutation& w, const Composition& rho) {
    return is_min_left(nu, w) && is_min_right(w, rho);
}

/// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
    explicit IntMatrix(const std::vector<std::vector<int>>& rs) {
        rows = static_cast<int>(rs.size());
        cols = rows ? static_cast<int>(rs[0].size()) : 0;
        for (const auto& row : rs) {
            if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged matrix");
            a.insert(a.end(), row.begin(), row.end());
        }
    }
    int& operator()(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    int operator()(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }

    std::vector<int> row_sums() const {
        std::vector<int> s(static_cast<std::size_t>(rows), 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) s[static_cast<std::size_t>(i)] += (*this)(i, j);
        return s;
    }
    std::vector<int> col_sums() const {
        std::vector<int> s(static_cast<std::size_t>(cols), 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) s[static_cast<std::size_t>(j)] += (*this)(i, j);
        return s;
    }
    int total() const { return std::accumulate(a.begin(), a.end(), 0); }
    IntMatrix transpose() const {
        IntMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    std::vector<std::vector<int>> to_rows() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i)
            out[static_cast<std::size_t>(i)].assign(a.begin() + i * cols, a.begin() + (i + 1) * cols);
        return out;
    }
    friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
};

/// a_ij = |R_i^nu ∩ w R_j^rho| for any w (constant on double cosets).
inline IntMatrix coset_matrix(const Composition& nu, const Permutation& w, const Composition& rho) {
    if (nu.total() != w.rank() || rho.total() != w.rank()) throw std::invalid_argument("coset_matrix: size mismatch");
    IntMatrix A(static_cast<int>(nu.size()), static_cast<int>(rho.size()));
    for (int k = 1; k <= w.rank(); ++k)
        ++A(static_cast<int>(nu.block_of(w(k))), static_cast<int>(rho.block_of(k)));
    return A;
}

/// a_ij = |R_i^nu ∩ w R_j^rho|; requires w in D_{nu,rho}.
inline IntMatrix jmath(const Composition& nu, const Permutation& w, const Composition& rho) {
    if (nu.total() != w.rank() || rho.total() != w.rank()) throw std::invalid_argument("jmath: size mismatch");
    if (!is_min_double(nu, w, rho)) throw std::invalid_argument("jmath: w is not a minimal double coset representative");
    return coset_matrix(nu, w, rho);
}

/// Pseudo-matrix reading: `reverse_row[i]` reverses the integers of row i,
/// `bottom_up[j]` reads column j from the bottom.
inline Permutation pseudo_matrix_word(const IntMatrix& A, const std::vector<bool>& reverse_row,
                                      const std::vector<bool>& bottom_up) {
    for (int x : A.a)
        if (x < 0) throw std::invalid_argument("negative matrix entry");
    // cell contents
    std::vector<std::vector<int>> cell(A.a.size());
    int next = 1;
    for (int i = 0; i < A.rows; ++i) {
        const int row_start = next;
        int row_len = 0;
        for (int j = 0; j < A.cols; ++j) row_len += A(i, j);
        int offset = 0;
        for (int j = 0; j < A.cols; ++j) {
            auto& c = cell[static_cast<std::size_t>(i * A.cols + j)];
            for (int t = 0; t < A(i, j); ++t, ++offset)
                c.push_back(reverse_row[static_cast<std::size_t>(i)] ? row_start + row_len - 1 - offset
                                                                     : row_start + offset);
        }
        next += row_len;
    }
    std::vector<int> word;
    for (int j = 0; j < A.cols; ++j) {
        for (int t = 0; t < A.rows; ++t) {
            const int i = bottom_up[static_cast<std::size_t>(j)] ? A.rows - 1 - t : t;
            const auto& c = cell[static_cast<std::size_t>(i * A.cols + j)];
            word.insert(word.end(), c.begin(), c.end());
        }
    }
    return Permutation(word);
}

enum class WordVariant { minus, plus };

/// w_A^- (shortest) or w_A^+ (longest) element of the double coset of A.
inline Permutation coset_words(const IntMatrix& A, WordVariant variant) {
    const bool plus = variant == WordVariant::plus;
    return pseudo_matrix_word(A, std::vector<bool>(static_cast<std::size_t>(A.rows), plus),
                              std::vector<bool>(static_cast<std::size_t>(A.cols), plus));
}

/// The minimal double coset representative with jmath(nu, w, rho) = A.
inline Permutation jmath_inverse(const IntMatrix& A) { return coset_words(A, WordVariant::minus); }

}  // namespace qss
