#ifndef LIECENSUS_PARTITIONS_HPP
#define LIECENSUS_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace liecensus {

// Weakly decreasing positive parts; the empty partition of 0 is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0)
                throw invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw invalid_argument("partition parts must be weakly decreasing");
        }
    }

    // (1^m)
    static Partition column(unsigned m) { return Partition(std::vector<unsigned>(m, 1)); }

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    unsigned largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    // m_i: number of parts equal to i.
    unsigned multiplicity(unsigned i) const noexcept
    {
        unsigned c = 0;
        for (unsigned p : parts_)
            c += p == i;
        return c;
    }

    // Number of parts >= j.
    unsigned parts_at_least(unsigned j) const noexcept
    {
        unsigned c = 0;
        for (unsigned p : parts_)
            c += p >= j;
        return c;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
};

namespace detail {
inline void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                           std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

// Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> enum_partitions(unsigned n)
{
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

// The type nu = (1^{n_1} 2^{n_2} ...), stored as multiplicities: counts[i-1] = n_i.
class TypeVector {
public:
    TypeVector() = default;
    explicit TypeVector(std::vector<unsigned> counts) : counts_(std::move(counts)) { trim(); }

    static TypeVector of(const Partition& nu)
    {
        std::vector<unsigned> c(nu.largest(), 0);
        for (unsigned p : nu.parts())
            ++c[p - 1];
        return TypeVector(std::move(c));
    }

    // n_i for i >= 1.
    unsigned count(unsigned i) const noexcept { return i >= 1 && i <= counts_.size() ? counts_[i - 1] : 0; }
    const std::vector<unsigned>& counts() const noexcept { return counts_; }

    // sum i n_i
    unsigned size() const noexcept
    {
        unsigned s = 0;
        for (std::size_t i = 0; i < counts_.size(); ++i)
            s += static_cast<unsigned>(i + 1) * counts_[i];
        return s;
    }

    Partition as_partition() const
    {
        std::vector<unsigned> parts;
        for (std::size_t i = counts_.size(); i-- > 0;)
            parts.insert(parts.end(), counts_[i], static_cast<unsigned>(i + 1));
        return Partition(std::move(parts));
    }

    std::string to_string() const
    {
        std::string s = "(";
        bool first = true;
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (counts_[i] == 0)
                continue;
            if (!first)
                s += " ";
            first = false;
            s += std::to_string(i + 1) + "^" + std::to_string(counts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const TypeVector&, const TypeVector&) = default;
    friend auto operator<=>(const TypeVector&, const TypeVector&) = default;

private:
    void trim()
    {
        while (!counts_.empty() && counts_.back() == 0)
            counts_.pop_back();
    }

    std::vector<unsigned> counts_;
};

} // namespace liecensus

#endif
