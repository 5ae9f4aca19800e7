#include "rslab/exact.hpp"

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rslab {

namespace {

struct Overflow {};

struct CheckedOps {
    using value_type = std::int64_t;
    static value_type mul(value_type a, value_type b) {
        value_type r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static value_type sub(value_type a, value_type b) {
        value_type r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
};

struct BigOps {
    using value_type = boost::multiprecision::cpp_int;
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type sub(const value_type& a, const value_type& b) { return a - b; }
};

template <typename Ops>
int bareiss_rank(const IntMatrix& src) {
    using T = typename Ops::value_type;
    const auto rows = static_cast<std::size_t>(src.rows()), cols = static_cast<std::size_t>(src.cols());
    std::vector<std::vector<T>> a(rows, std::vector<T>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = T(src(Eigen::Index(i), Eigen::Index(j)));
    }
    T prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                // Exact: every intermediate is a minor of the pivot columns.
                a[i][j] = Ops::sub(Ops::mul(a[rank][c], a[i][j]), Ops::mul(a[i][c], a[rank][j])) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace

int exact_rank(const IntMatrix& m) {
    try {
        return bareiss_rank<CheckedOps>(m);
    } catch (const Overflow&) {
        return bareiss_rank<BigOps>(m);
    }
}

bool is_full_rank_square(const IntMatrix& m) { return m.rows() == m.cols() && exact_rank(m) == m.rows(); }

} // namespace rslab
