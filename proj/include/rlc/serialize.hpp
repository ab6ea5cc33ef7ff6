#pragma once

// Binary index file, all integers little-endian:
//
//   "RLC1"  u32 version=1  u16 k  u64 n  u64 |labels|
//   |labels| x (u32 byte length, bytes)          label names in id order
//   n x u64                                      vertex id for access id 1..n
//   u64 count, count x (u16 len, len x u32)      minimum-repeat dictionary
//   per vertex v in id order:
//     u64 count, count x (u64 hub aid, u32 mr)   L_in(v)
//     u64 count, count x (u64 hub aid, u32 mr)   L_out(v)
//   u64 n, n x (u32 byte length, bytes)          vertex names in id order

#include <cstdint>
#include <cstring>
#include <istream>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/index.hpp"

namespace rlc {

inline constexpr char kIndexMagic[4] = {'R', 'L', 'C', '1'};
inline constexpr std::uint32_t kIndexVersion = 1;

namespace detail {

class ByteWriter {
public:
    template <class T>
    void put(T value) {
        static_assert(std::is_unsigned_v<T>);
        for (std::size_t i = 0; i < sizeof(T); ++i) bytes_.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
    }
    void put_string(const std::string& s) {
        put(static_cast<std::uint32_t>(s.size()));
        bytes_.insert(bytes_.end(), s.begin(), s.end());
    }
    void put_raw(const char* data, std::size_t n) { bytes_.insert(bytes_.end(), data, data + n); }

    std::vector<std::uint8_t> take() && { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    template <class T>
    T get() {
        need(sizeof(T));
        T value = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes_[pos_ + i]) << (8 * i);
        pos_ += sizeof(T);
        return value;
    }
    std::string get_string() {
        const auto len = get<std::uint32_t>();
        need(len);
        std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), len);
        pos_ += len;
        return s;
    }
    void expect_raw(const char* data, std::size_t n) {
        need(n);
        if (std::memcmp(bytes_.data() + pos_, data, n) != 0) throw Error(Errc::corrupt_index, "bad magic");
        pos_ += n;
    }
    /// Rejects element counts that cannot fit in the remaining bytes.
    std::uint64_t get_count(std::size_t min_element_bytes) {
        const auto count = get<std::uint64_t>();
        if (min_element_bytes > 0 && count > remaining() / min_element_bytes) {
            throw Error(Errc::corrupt_index, "element count exceeds remaining bytes");
        }
        return count;
    }
    std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

private:
    void need(std::size_t n) const {
        if (remaining() < n) throw Error(Errc::corrupt_index, "truncated index stream");
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

inline void write_entries(ByteWriter& w, const EntryList& list) {
    w.put(static_cast<std::uint64_t>(list.size()));
    for (const auto& e : list) {
        w.put(static_cast<std::uint64_t>(e.hub_aid));
        w.put(static_cast<std::uint32_t>(e.mr));
    }
}

inline EntryList read_entries(ByteReader& r, std::uint64_t n, std::size_t dict_size) {
    const auto count = r.get_count(12);
    EntryList list;
    list.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto hub = r.get<std::uint64_t>();
        const auto mr = r.get<std::uint32_t>();
        if (hub == 0 || hub > n) throw Error(Errc::corrupt_index, "hub access id out of range");
        if (mr >= dict_size) throw Error(Errc::corrupt_index, "minimum-repeat id out of range");
        IndexEntry e{static_cast<std::uint32_t>(hub), mr};
        if (!list.empty() && !(list.back() < e)) throw Error(Errc::corrupt_index, "entry list not strictly sorted");
        list.push_back(e);
    }
    return list;
}

}  // namespace detail

inline std::vector<std::uint8_t> serialize(const RlcIndex& idx) {
    detail::ByteWriter w;
    w.put_raw(kIndexMagic, 4);
    w.put(kIndexVersion);
    w.put(static_cast<std::uint16_t>(idx.k()));
    const auto n = static_cast<std::uint64_t>(idx.num_vertices());
    w.put(n);
    w.put(static_cast<std::uint64_t>(idx.num_labels()));
    for (const auto& name : idx.label_names()) w.put_string(name);
    for (VertexId v : idx.order().ranked()) w.put(static_cast<std::uint64_t>(v));
    const auto& dict = idx.dictionary();
    w.put(static_cast<std::uint64_t>(dict.size()));
    for (const auto& seq : dict.sequences()) {
        w.put(static_cast<std::uint16_t>(seq.size()));
        for (Label l : seq) w.put(static_cast<std::uint32_t>(l));
    }
    for (VertexId v = 0; v < n; ++v) {
        detail::write_entries(w, idx.l_in(v));
        detail::write_entries(w, idx.l_out(v));
    }
    w.put(n);
    for (const auto& name : idx.vertex_names()) w.put_string(name);
    return std::move(w).take();
}

inline RlcIndex deserialize(std::span<const std::uint8_t> bytes) {
    detail::ByteReader r(bytes);
    r.expect_raw(kIndexMagic, 4);
    if (const auto version = r.get<std::uint32_t>(); version != kIndexVersion) {
        throw Error(Errc::corrupt_index, "unsupported index version " + std::to_string(version));
    }
    const auto k = r.get<std::uint16_t>();
    if (k == 0) throw Error(Errc::corrupt_index, "k must be positive");
    const auto n = r.get_count(8);
    const auto num_labels = r.get_count(4);

    std::vector<std::string> labels;
    labels.reserve(num_labels);
    for (std::uint64_t i = 0; i < num_labels; ++i) labels.push_back(r.get_string());

    std::vector<VertexId> ranked(n);
    for (auto& v : ranked) {
        const auto id = r.get<std::uint64_t>();
        if (id >= n) throw Error(Errc::corrupt_index, "vertex id out of range in vertex order");
        v = static_cast<VertexId>(id);
    }
    VertexOrder order(std::move(ranked));

    MrDictionary dict;
    const auto dict_size = r.get_count(2);
    for (std::uint64_t i = 0; i < dict_size; ++i) {
        const auto len = r.get<std::uint16_t>();
        if (len == 0 || len > k) throw Error(Errc::corrupt_index, "minimum repeat length out of range");
        std::vector<Label> seq(len);
        for (auto& l : seq) {
            l = r.get<std::uint32_t>();
            if (l >= num_labels) throw Error(Errc::corrupt_index, "label id out of range in dictionary");
        }
        LabelSeq s(std::move(seq));
        if (!is_primitive(s) || dict.find(s)) throw Error(Errc::corrupt_index, "dictionary entry not primitive or repeated");
        dict.intern(s);
    }

    std::vector<EntryList> l_in(n), l_out(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        l_in[v] = detail::read_entries(r, n, dict.size());
        l_out[v] = detail::read_entries(r, n, dict.size());
    }

    if (r.get<std::uint64_t>() != n) throw Error(Errc::corrupt_index, "vertex name count differs from n");
    std::vector<std::string> names;
    names.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) names.push_back(r.get_string());
    if (r.remaining() != 0) throw Error(Errc::corrupt_index, "trailing bytes after index");

    RlcIndex idx(k, std::move(order), std::move(labels), std::move(names));
    idx.dictionary() = std::move(dict);
    for (std::uint64_t v = 0; v < n; ++v) {
        idx.l_in(static_cast<VertexId>(v)) = std::move(l_in[v]);
        idx.l_out(static_cast<VertexId>(v)) = std::move(l_out[v]);
    }
    return idx;
}

inline void write_index(const RlcIndex& idx, std::ostream& out) {
    const auto bytes = serialize(idx);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

inline RlcIndex read_index(std::istream& in) {
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return deserialize(bytes);
}

inline IndexStats index_stats(const RlcIndex& idx) {
    IndexStats s;
    for (VertexId v = 0; v < idx.num_vertices(); ++v) {
        s.in_entries += idx.l_in(v).size();
        s.out_entries += idx.l_out(v).size();
    }
    s.total_entries = s.in_entries + s.out_entries;
    s.dictionary_size = idx.dictionary().size();

    const std::size_t n = idx.num_vertices();
    std::size_t bytes = 4 + 4 + 2 + 8 + 8 + 8 * n + 8 + 16 * n + 12 * s.total_entries + 8;
    for (const auto& name : idx.label_names()) bytes += 4 + name.size();
    for (const auto& seq : idx.dictionary().sequences()) bytes += 2 + 4 * seq.size();
    for (const auto& name : idx.vertex_names()) bytes += 4 + name.size();
    s.serialized_bytes = bytes;
    return s;
}

}  // namespace rlc
