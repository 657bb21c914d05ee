#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace cactus {

// Ground set 1 < 1~ < 2 < 2~ < ... < n < n~, stored as positions 0..2n-1.
// Plain label i sits at 2(i-1), tilde label i~ at 2(i-1)+1, so the circular
// order is integer order.
inline int plain_pos(int i) { return 2 * (i - 1); }
inline int tilde_pos(int i) { return 2 * (i - 1) + 1; }
inline bool is_tilde_pos(int p) { return (p & 1) != 0; }
inline int label_of_pos(int p) { return p / 2 + 1; }

inline std::string pos_name(int p) {
    return std::to_string(label_of_pos(p)) + (is_tilde_pos(p) ? "~" : "");
}

/// Bitmask over ground positions. Good for n <= 16.
using IndexSet = std::uint32_t;

inline int popcount(IndexSet s) { return __builtin_popcount(s); }

inline std::vector<int> positions(IndexSet s) {
    std::vector<int> out;
    for (int p = 0; s != 0; ++p, s >>= 1)
        if (s & 1u) out.push_back(p);
    return out;
}

/// "1,1~,2"-style name of an index set.
inline std::string index_set_name(IndexSet s) {
    std::string out;
    for (int p : positions(s)) {
        if (!out.empty()) out += ',';
        out += pos_name(p);
    }
    return out;
}

inline IndexSet parse_index_set(const std::string& text) {
    IndexSet s = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string tok = text.substr(start, end - start);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(tok.begin());
        if (!tok.empty()) {
            bool tilde = tok.back() == '~';
            if (tilde) tok.pop_back();
            int i = 0;
            try {
                std::size_t used = 0;
                i = std::stoi(tok, &used);
                if (used != tok.size()) throw InvalidInput("");
            } catch (const std::exception&) {
                throw InvalidInput("malformed index set '" + text + "'");
            }
            if (i < 1 || i > 16) throw InvalidInput("index out of range in '" + text + "'");
            const IndexSet bit = IndexSet{1} << (tilde ? tilde_pos(i) : plain_pos(i));
            if (s & bit) throw InvalidInput("repeated index in '" + text + "'");
            s |= bit;
        }
        start = end + 1;
    }
    return s;
}

namespace detail {

// Two disjoint sorted blocks cross iff their merged label sequence alternates
// at least A,B,A,B.
inline bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<std::pair<int, int>> merged;
    for (int x : a) merged.emplace_back(x, 0);
    for (int x : b) merged.emplace_back(x, 1);
    std::sort(merged.begin(), merged.end());
    int runs = 0;
    int last = -1;
    for (const auto& [x, tag] : merged) {
        if (tag != last) ++runs;
        last = tag;
    }
    return runs >= 4;
}

inline bool family_noncrossing(const std::vector<std::vector<int>>& blocks) {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (blocks_cross(blocks[i], blocks[j])) return false;
    return true;
}

inline std::vector<std::vector<int>> canonical_blocks(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return blocks;
}

inline void check_partition(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 1) throw InvalidInput("partition size must be positive");
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& b : blocks) {
        if (b.empty()) throw InvalidInput("empty block");
        for (int x : b) {
            if (x < 1 || x > n) throw InvalidInput("block element " + std::to_string(x) + " outside 1.." + std::to_string(n));
            if (seen[static_cast<std::size_t>(x)]++) throw InvalidInput("element " + std::to_string(x) + " in two blocks");
        }
    }
    for (int x = 1; x <= n; ++x)
        if (!seen[static_cast<std::size_t>(x)]) throw InvalidInput("element " + std::to_string(x) + " missing from partition");
}

}  // namespace detail

/// True iff the family (which must partition 1..n) has no crossing blocks.
/// Throws InvalidInput when it is not a partition.
inline bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks) {
    detail::check_partition(n, blocks);
    return detail::family_noncrossing(detail::canonical_blocks(blocks));
}

/// Noncrossing partition of {1..n}. Blocks are kept sorted internally and
/// ordered by their minimum element.
class NoncrossingPartition {
public:
    NoncrossingPartition() = default;
    NoncrossingPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
        detail::check_partition(n, blocks);
        blocks_ = detail::canonical_blocks(std::move(blocks));
        if (!detail::family_noncrossing(blocks_)) throw InvalidInput("partition " + key() + " is crossing");
    }

    static NoncrossingPartition singletons(int n) {
        std::vector<std::vector<int>> b;
        for (int i = 1; i <= n; ++i) b.push_back({i});
        return {n, b};
    }

    static NoncrossingPartition single_block(int n) {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        return {n, {all}};
    }

    /// Built from block ids per element (element i has id labels[i-1]).
    static NoncrossingPartition from_labels(const std::vector<int>& labels) {
        std::vector<std::vector<int>> blocks;
        std::vector<int> first_index;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            auto it = std::find(first_index.begin(), first_index.end(), labels[i]);
            if (it == first_index.end()) {
                first_index.push_back(labels[i]);
                blocks.push_back({static_cast<int>(i) + 1});
            } else {
                blocks[static_cast<std::size_t>(it - first_index.begin())].push_back(static_cast<int>(i) + 1);
            }
        }
        return {static_cast<int>(labels.size()), blocks};
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    [[nodiscard]] int block_count() const { return static_cast<int>(blocks_.size()); }

    /// Index (into blocks()) of the block containing element i.
    [[nodiscard]] int block_of(int i) const {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), i)) return static_cast<int>(b);
        throw InvalidInput("element " + std::to_string(i) + " not in partition");
    }

    /// Restricted growth string: entry i-1 is block_of(i).
    [[nodiscard]] std::vector<int> rgs() const {
        std::vector<int> r(static_cast<std::size_t>(n_));
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (int x : blocks_[b]) r[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
        return r;
    }

    [[nodiscard]] bool is_trivial() const { return block_count() == n_; }

    /// "{1},{2,3}"; pass tilde=true for "{1~,3~},{2~}".
    [[nodiscard]] std::string key(bool tilde = false) const {
        std::string out;
        for (const auto& b : blocks_) {
            if (!out.empty()) out += ',';
            out += '{';
            for (std::size_t k = 0; k < b.size(); ++k) {
                if (k) out += ',';
                out += std::to_string(b[k]);
                if (tilde) out += '~';
            }
            out += '}';
        }
        return out;
    }

    friend bool operator==(const NoncrossingPartition& a, const NoncrossingPartition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    friend std::ostream& operator<<(std::ostream& os, const NoncrossingPartition& p) { return os << p.key(); }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// Canonical order: fewer blocks first; ties broken by restricted growth
/// string, larger first. For n = 3 this lists {123}, {1|23}, {13|2}, {12|3}, {1|2|3}.
inline bool canonical_less(const NoncrossingPartition& a, const NoncrossingPartition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
    return a.rgs() > b.rgs();
}

/// Parses "{1},{2,3}" (tilde marks are ignored).
inline NoncrossingPartition parse_partition(int n, const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::vector<int>* cur = nullptr;
    std::string num;
    auto flush = [&] {
        if (num.empty()) return;
        if (!cur) throw InvalidInput("malformed partition '" + text + "'");
        cur->push_back(std::stoi(num));
        num.clear();
    };
    for (char ch : text) {
        if (ch == '{') {
            if (cur) throw InvalidInput("malformed partition '" + text + "'");
            blocks.emplace_back();
            cur = &blocks.back();
        } else if (ch == '}') {
            flush();
            cur = nullptr;
        } else if (ch == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            num += ch;
        } else if (ch != '~' && ch != ' ') {
            throw InvalidInput("malformed partition '" + text + "'");
        }
    }
    if (cur) throw InvalidInput("malformed partition '" + text + "'");
    return {n, blocks};
}

/// Kreweras complement, returned as a partition of {1..n} standing for the
/// tilde labels. i~ and j~ (i < j) share a block iff no block of sigma
/// straddles the arc {i+1..j}.
inline NoncrossingPartition kreweras_complement(const NoncrossingPartition& sigma) {
    const int n = sigma.n();
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool ok = std::all_of(sigma.blocks().begin(), sigma.blocks().end(), [&](const std::vector<int>& b) {
                auto inside = [&](int x) { return x > i && x <= j; };
                return std::all_of(b.begin(), b.end(), inside) || std::none_of(b.begin(), b.end(), inside);
            });
            if (ok) parent[static_cast<std::size_t>(find(j))] = find(i);
        }
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels[static_cast<std::size_t>(i - 1)] = find(i);
    return NoncrossingPartition::from_labels(labels);
}

/// sigma together with its complement on the tilde labels.
struct KrewerasPair {
    NoncrossingPartition sigma;
    NoncrossingPartition sigma_tilde;

    static KrewerasPair of(const NoncrossingPartition& s) { return {s, kreweras_complement(s)}; }

    /// Both defining conditions: the union is noncrossing on the interleaved
    /// circle, and the block counts add to n+1.
    [[nodiscard]] bool valid() const {
        const int n = sigma.n();
        if (sigma_tilde.n() != n || sigma.block_count() + sigma_tilde.block_count() != n + 1) return false;
        std::vector<std::vector<int>> all;
        for (const auto& b : sigma.blocks()) {
            all.emplace_back();
            for (int x : b) all.back().push_back(plain_pos(x));
        }
        for (const auto& b : sigma_tilde.blocks()) {
            all.emplace_back();
            for (int x : b) all.back().push_back(tilde_pos(x));
        }
        return detail::family_noncrossing(all);
    }
};

/// All noncrossing partitions of [n] in canonical order. Length Cat_n.
inline std::vector<NoncrossingPartition> enumerate_noncrossing(int n) {
    if (n < 1) throw InvalidInput("n must be at least 1");
    std::vector<NoncrossingPartition> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int max_used) -> void {
        if (i == n) {
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(max_used) + 1);
            for (int k = 0; k < n; ++k) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(k)])].push_back(k + 1);
            if (detail::family_noncrossing(blocks)) out.emplace_back(n, blocks);
            return;
        }
        for (int v = 0; v <= max_used + 1; ++v) {
            rgs[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, std::max(max_used, v));
        }
    };
    rgs[0] = 0;
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

/// Each block of sigma holds exactly one element of I.
inline bool is_concordant(const std::vector<int>& I, const NoncrossingPartition& sigma) {
    for (int x : I)
        if (x < 1 || x > sigma.n()) return false;
    for (const auto& b : sigma.blocks()) {
        auto c = std::count_if(I.begin(), I.end(), [&](int x) { return std::binary_search(b.begin(), b.end(), x); });
        if (c != 1) return false;
    }
    return true;
}

/// A pair (I, I~) of a plain and a tilde index set. Tilde elements are stored
/// by label, so I_tilde = {1, 3} means {1~, 3~}.
struct IndexPair {
    std::vector<int> I;
    std::vector<int> I_tilde;

    [[nodiscard]] IndexSet mask() const {
        IndexSet s = 0;
        for (int i : I) s |= IndexSet{1} << plain_pos(i);
        for (int i : I_tilde) s |= IndexSet{1} << tilde_pos(i);
        return s;
    }

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// All (I, I~) concordant with (sigma, sigma~): one representative per block
/// of each. Ordered by index-set mask.
inline std::vector<IndexPair> concordant_index_pairs(const KrewerasPair& pair) {
    auto transversals = [](const NoncrossingPartition& p) {
        std::vector<std::vector<int>> acc{{}};
        for (const auto& b : p.blocks()) {
            std::vector<std::vector<int>> next;
            for (const auto& partial : acc)
                for (int x : b) {
                    auto t = partial;
                    t.push_back(x);
                    next.push_back(std::move(t));
                }
            acc = std::move(next);
        }
        for (auto& t : acc) std::sort(t.begin(), t.end());
        return acc;
    };
    std::vector<IndexPair> out;
    for (const auto& I : transversals(pair.sigma))
        for (const auto& J : transversals(pair.sigma_tilde)) out.push_back({I, J});
    std::sort(out.begin(), out.end(), [](const IndexPair& a, const IndexPair& b) { return a.mask() < b.mask(); });
    return out;
}

/// Perfect matching on {1..2n}. Pairs stored as (a, b) with a < b, sorted.
class Matching {
public:
    Matching() = default;
    Matching(int n, std::vector<std::pair<int, int>> pairs) : n_(n), pairs_(std::move(pairs)) {
        std::vector<int> seen(static_cast<std::size_t>(2 * n) + 1, 0);
        for (auto& [a, b] : pairs_) {
            if (a > b) std::swap(a, b);
            for (int x : {a, b}) {
                if (x < 1 || x > 2 * n) throw InvalidInput("matching element out of range");
                if (seen[static_cast<std::size_t>(x)]++) throw InvalidInput("matching element used twice");
            }
        }
        if (pairs_.size() != static_cast<std::size_t>(n)) throw InvalidInput("matching is not perfect");
        std::sort(pairs_.begin(), pairs_.end());
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    /// "{1,7},{2,6},..."
    [[nodiscard]] std::string key() const {
        std::string out;
        for (const auto& [a, b] : pairs_) {
            if (!out.empty()) out += ',';
            out += '{' + std::to_string(a) + ',' + std::to_string(b) + '}';
        }
        return out;
    }

    friend bool operator==(const Matching&, const Matching&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Matching& m) { return os << m.key(); }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> pairs_;
};

}  // namespace cactus
