#pragma once

/**
 * @file label_seq.hpp
 * @brief String algebra over edge-label sequences.
 *
 * A label sequence L has a minimum repeat MR(L): the shortest L' with
 * L = (L')^z. Sequences equal to their own MR are primitive. A sequence
 * of the form (L')^h . L'' with h >= 2, L' primitive and L'' a proper
 * prefix of L' (or empty) has kernel L' and tail L''.
 *
 * Both MR and the kernel fall out of the smallest period q = n - border(n)
 * of the border (KMP failure) array:
 *   - MR is the length-q prefix when q divides n, the whole sequence otherwise;
 *   - a kernel exists iff floor(n / q) >= 2, and then it is the length-q prefix.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rlc/error.hpp"

namespace rlc {

/// Dense id of an edge label within one graph's alphabet.
using Label = std::uint32_t;

class LabelSeq {
public:
    LabelSeq() = default;
    LabelSeq(std::initializer_list<Label> labels) : labels_(labels) {}
    explicit LabelSeq(std::vector<Label> labels) : labels_(std::move(labels)) {}
    explicit LabelSeq(std::span<const Label> labels) : labels_(labels.begin(), labels.end()) {}

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    Label operator[](std::size_t i) const { return labels_[i]; }
    Label front() const { return labels_.front(); }
    Label back() const { return labels_.back(); }

    auto begin() const noexcept { return labels_.begin(); }
    auto end() const noexcept { return labels_.end(); }

    std::span<const Label> view() const noexcept { return labels_; }
    const std::vector<Label>& labels() const noexcept { return labels_; }

    void push_back(Label l) { labels_.push_back(l); }
    void push_front(Label l) { labels_.insert(labels_.begin(), l); }

    LabelSeq prefix(std::size_t n) const {
        return LabelSeq(std::vector<Label>(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(n)));
    }
    LabelSeq suffix(std::size_t n) const {
        return LabelSeq(std::vector<Label>(labels_.end() - static_cast<std::ptrdiff_t>(n), labels_.end()));
    }

    friend LabelSeq operator+(const LabelSeq& a, const LabelSeq& b) {
        std::vector<Label> out;
        out.reserve(a.size() + b.size());
        out.insert(out.end(), a.labels_.begin(), a.labels_.end());
        out.insert(out.end(), b.labels_.begin(), b.labels_.end());
        return LabelSeq(std::move(out));
    }

    /// L^h
    LabelSeq repeat(std::size_t h) const {
        std::vector<Label> out;
        out.reserve(labels_.size() * h);
        for (std::size_t i = 0; i < h; ++i) out.insert(out.end(), labels_.begin(), labels_.end());
        return LabelSeq(std::move(out));
    }

    friend bool operator==(const LabelSeq&, const LabelSeq&) = default;
    friend auto operator<=>(const LabelSeq& a, const LabelSeq& b) { return a.labels_ <=> b.labels_; }

private:
    std::vector<Label> labels_;
};

struct LabelSeqHash {
    std::size_t operator()(const LabelSeq& s) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.size();
        for (Label l : s) {
            h ^= l + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

struct KernelDecomposition {
    LabelSeq kernel;
    LabelSeq tail;
    std::size_t repetitions = 0;

    friend bool operator==(const KernelDecomposition&, const KernelDecomposition&) = default;
};

namespace detail {

inline void require_nonempty(std::span<const Label> seq) {
    if (seq.empty()) throw Error(Errc::invalid_sequence, "empty label sequence");
}

}  // namespace detail

/// Border array: border[i] is the length of the longest proper border of
/// seq[0, i). border[0] is 0 by convention.
inline std::vector<std::size_t> border_array(std::span<const Label> seq) {
    std::vector<std::size_t> border(seq.size() + 1, 0);
    std::size_t b = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        while (b > 0 && seq[i] != seq[b]) b = border[b];
        if (seq[i] == seq[b]) ++b;
        border[i + 1] = b;
    }
    return border;
}

/// Smallest p >= 1 with seq[i] == seq[i + p] for all valid i.
inline std::size_t smallest_period(std::span<const Label> seq) {
    detail::require_nonempty(seq);
    return seq.size() - border_array(seq).back();
}

/// Length of MR(seq). Hot path of the index builder; avoids materializing the repeat.
inline std::size_t minimum_repeat_length(std::span<const Label> seq) {
    const std::size_t n = seq.size();
    const std::size_t p = smallest_period(seq);
    return n % p == 0 ? p : n;
}

inline LabelSeq minimum_repeat(const LabelSeq& seq) {
    return seq.prefix(minimum_repeat_length(seq.view()));
}

inline bool is_primitive(const LabelSeq& seq) {
    return minimum_repeat_length(seq.view()) == seq.size();
}

/// MR(seq) if it is no longer than k.
inline std::optional<LabelSeq> k_mr(const LabelSeq& seq, std::size_t k) {
    if (k == 0) throw Error(Errc::invalid_sequence, "k must be positive");
    const std::size_t len = minimum_repeat_length(seq.view());
    if (len > k) return std::nullopt;
    return seq.prefix(len);
}

inline std::optional<KernelDecomposition> kernel_decompose(const LabelSeq& seq) {
    const std::size_t n = seq.size();
    const std::size_t q = smallest_period(seq.view());
    if (n / q < 2) return std::nullopt;
    return KernelDecomposition{seq.prefix(q), seq.suffix(n % q), n / q};
}

/// Number of distinct primitive sequences of length 1..k over an alphabet
/// of the given size: C = sum_{i<=k} F(i), F(i) = A^i - sum_{j | i, j < i} F(j).
inline std::uint64_t primitive_count(std::uint64_t alphabet_size, std::uint64_t k) {
    if (alphabet_size == 0 || k == 0) throw Error(Errc::invalid_sequence, "alphabet size and k must be positive");
    std::vector<std::uint64_t> f(k + 1, 0);
    std::uint64_t power = 1;
    std::uint64_t total = 0;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (__builtin_mul_overflow(power, alphabet_size, &power)) {
            throw Error(Errc::overflow, "alphabet_size^" + std::to_string(i) + " overflows 64 bits");
        }
        std::uint64_t fi = power;
        for (std::uint64_t j = 1; j < i; ++j) {
            if (i % j == 0) fi -= f[j];
        }
        f[i] = fi;
        if (__builtin_add_overflow(total, fi, &total)) throw Error(Errc::overflow, "primitive count overflows 64 bits");
    }
    return total;
}

/// Calls fn(seq) for every primitive sequence of length 1..k over labels
/// 0..alphabet_size-1, shortest first, lexicographic within a length.
template <class Fn>
void for_each_primitive(std::uint32_t alphabet_size, std::size_t k, Fn&& fn) {
    std::vector<Label> digits;
    for (std::size_t len = 1; len <= k; ++len) {
        digits.assign(len, 0);
        while (true) {
            LabelSeq seq{std::span<const Label>(digits)};
            if (is_primitive(seq)) fn(seq);
            std::size_t pos = len;
            while (pos > 0 && ++digits[pos - 1] == alphabet_size) digits[--pos] = 0;
            if (pos == 0) break;
        }
    }
}

}  // namespace rlc

template <>
struct std::hash<rlc::LabelSeq> : rlc::LabelSeqHash {};
