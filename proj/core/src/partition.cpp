#include "eqg/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace eqg {

Word plainWord(int n) { return Word(static_cast<size_t>(n), Color::Plain); }

Word parseWord(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case 'o': w.push_back(Color::White); break;
            case 'b': w.push_back(Color::Black); break;
            case '-': w.push_back(Color::Plain); break;
            default: throw DomainError("bad word character, expected o/b/-");
        }
    }
    return w;
}

std::string wordToString(const Word& w) {
    std::string s;
    for (Color c : w) s += (c == Color::White ? 'o' : c == Color::Black ? 'b' : '-');
    return s;
}

namespace {

std::vector<int> toRestrictedGrowth(std::vector<int> labels, int* countOut) {
    std::map<int, int> seen;
    int next = 0;
    for (int& v : labels) {
        auto [it, fresh] = seen.emplace(v, next);
        if (fresh) ++next;
        v = it->second;
    }
    if (countOut) *countOut = next;
    return labels;
}

} // namespace

SetPartition::SetPartition(Word upper, Word lower, std::vector<int> blockOf)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (blockOf.size() != upper_.size() + lower_.size())
        throw DomainError("block labels do not cover the legs");
    blockOf_ = toRestrictedGrowth(std::move(blockOf), &blockCount_);
}

SetPartition SetPartition::fromBlocks(const Word& upper, const Word& lower,
                                      const std::vector<std::vector<int>>& oneBasedBlocks) {
    const int n = static_cast<int>(upper.size() + lower.size());
    std::vector<int> labels(static_cast<size_t>(n), -1);
    int id = 0;
    for (const auto& b : oneBasedBlocks) {
        if (b.empty()) throw DomainError("empty block");
        for (int leg : b) {
            if (leg < 1 || leg > n) throw DomainError("leg index out of range");
            if (labels[static_cast<size_t>(leg - 1)] != -1) throw DomainError("leg in two blocks");
            labels[static_cast<size_t>(leg - 1)] = id;
        }
        ++id;
    }
    for (int v : labels)
        if (v == -1) throw DomainError("leg missing from blocks");
    return SetPartition(upper, lower, std::move(labels));
}

SetPartition SetPartition::singleBlock(const Word& upper, const Word& lower) {
    return SetPartition(upper, lower, std::vector<int>(upper.size() + lower.size(), 0));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(blockCount_));
    for (int leg = 0; leg < legs(); ++leg) out[static_cast<size_t>(blockOf_[static_cast<size_t>(leg)])].push_back(leg + 1);
    return out;
}

bool SetPartition::operator<(const SetPartition& o) const {
    if (upper_ != o.upper_) return upper_ < o.upper_;
    if (lower_ != o.lower_) return lower_ < o.lower_;
    return blockOf_ < o.blockOf_;
}

std::string SetPartition::key() const {
    std::string s = wordToString(upper_) + "/" + wordToString(lower_) + ":";
    for (int v : blockOf_) {
        s += std::to_string(v);
        s += ',';
    }
    return s;
}

Family Family::parse(const std::string& name) {
    static const std::map<std::string, Tag> plainTags = {
        {"P", Tag::P}, {"P2", Tag::P2}, {"P2star", Tag::P2star}, {"NC", Tag::NC},
        {"NC2", Tag::NC2}, {"P12", Tag::P12}, {"NC12", Tag::NC12}, {"Peven", Tag::Peven},
        {"NCeven", Tag::NCeven}, {"PevenStar", Tag::PevenStar}, {"MatchP2", Tag::MatchP2},
        {"MatchNC2", Tag::MatchNC2}, {"MatchP2star", Tag::MatchP2star},
        {"MatchPeven", Tag::MatchPeven}, {"MatchNCeven", Tag::MatchNCeven},
        {"MatchPevenStar", Tag::MatchPevenStar}};
    auto it = plainTags.find(name);
    if (it != plainTags.end()) return Family{it->second, 1};
    for (const char* prefix : {"Ps(", "NCs("}) {
        const std::string p(prefix);
        if (name.rfind(p, 0) == 0 && name.back() == ')') {
            int s = std::stoi(name.substr(p.size(), name.size() - p.size() - 1));
            if (s < 1) throw DomainError("modulus must be >= 1");
            return Family{p[0] == 'P' ? Tag::Ps : Tag::NCs, s};
        }
    }
    throw DomainError("unknown partition family: " + name);
}

std::string Family::name() const {
    switch (tag) {
        case Tag::P: return "P";
        case Tag::P2: return "P2";
        case Tag::P2star: return "P2star";
        case Tag::NC: return "NC";
        case Tag::NC2: return "NC2";
        case Tag::P12: return "P12";
        case Tag::NC12: return "NC12";
        case Tag::Peven: return "Peven";
        case Tag::NCeven: return "NCeven";
        case Tag::PevenStar: return "PevenStar";
        case Tag::MatchP2: return "MatchP2";
        case Tag::MatchNC2: return "MatchNC2";
        case Tag::MatchP2star: return "MatchP2star";
        case Tag::MatchPeven: return "MatchPeven";
        case Tag::MatchNCeven: return "MatchNCeven";
        case Tag::MatchPevenStar: return "MatchPevenStar";
        case Tag::Ps: return "Ps(" + std::to_string(s) + ")";
        case Tag::NCs: return "NCs(" + std::to_string(s) + ")";
    }
    return "?";
}

bool Family::pairingsOnly() const {
    switch (tag) {
        case Tag::P2: case Tag::NC2: case Tag::P2star:
        case Tag::MatchP2: case Tag::MatchNC2: case Tag::MatchP2star:
            return true;
        default: return false;
    }
}

bool Family::noncrossing() const {
    switch (tag) {
        case Tag::NC: case Tag::NC2: case Tag::NC12:
        case Tag::NCeven: case Tag::MatchNC2: case Tag::MatchNCeven:
        case Tag::NCs:
            return true;
        default: return false;
    }
}

bool Family::colored() const {
    switch (tag) {
        case Tag::MatchP2: case Tag::MatchNC2: case Tag::MatchP2star:
        case Tag::MatchPeven: case Tag::MatchNCeven: case Tag::MatchPevenStar:
            return true;
        default: return false;
    }
}

namespace {

// +1 for a white lower leg or black upper leg, -1 otherwise; plain counts as white.
int legCharge(const SetPartition& pi, int leg) {
    const bool black = pi.colorOf(leg) == Color::Black;
    return pi.isUpper(leg) == black ? 1 : -1;
}

// Position of a leg on the clockwise boundary tour: upper row left to right,
// then lower row right to left.
int tourPosition(const SetPartition& pi, int leg) {
    const int k = pi.upperSize(), l = pi.lowerSize();
    return leg < k ? leg : k + (l - 1 - (leg - k));
}

std::vector<int> stripLabels(const SetPartition& pi) {
    // Boundary order of a planar strip drawing: lower legs left to right,
    // then upper legs right to left.
    std::vector<int> seq;
    seq.reserve(static_cast<size_t>(pi.legs()));
    const int k = pi.upperSize();
    for (int j = k; j < pi.legs(); ++j) seq.push_back(pi.blockIndex(j));
    for (int i = k - 1; i >= 0; --i) seq.push_back(pi.blockIndex(i));
    return seq;
}

bool noncrossingLabels(const std::vector<int>& seq, int blockCount) {
    std::vector<std::vector<int>> pos(static_cast<size_t>(blockCount));
    for (int p = 0; p < static_cast<int>(seq.size()); ++p) pos[static_cast<size_t>(seq[static_cast<size_t>(p)])].push_back(p);
    for (int a = 0; a < blockCount; ++a) {
        for (int b = a + 1; b < blockCount; ++b) {
            // Blocks cross iff their positions alternate a..b..a..b somewhere.
            const auto& pa = pos[static_cast<size_t>(a)];
            const auto& pb = pos[static_cast<size_t>(b)];
            size_t ia = 0, ib = 0;
            int alternations = 0, last = -1;
            while (ia < pa.size() || ib < pb.size()) {
                int cur;
                if (ib >= pb.size() || (ia < pa.size() && pa[ia] < pb[ib])) {
                    cur = 0;
                    ++ia;
                } else {
                    cur = 1;
                    ++ib;
                }
                if (cur != last) {
                    ++alternations;
                    last = cur;
                }
            }
            if (alternations >= 4) return false;
        }
    }
    return true;
}

struct BlockStats {
    int size = 0;
    int charge = 0;
    int parityBalance = 0; // (+1 for even tour position, -1 for odd)
};

std::vector<BlockStats> blockStats(const SetPartition& pi) {
    std::vector<BlockStats> st(static_cast<size_t>(pi.blockCount()));
    for (int leg = 0; leg < pi.legs(); ++leg) {
        BlockStats& b = st[static_cast<size_t>(pi.blockIndex(leg))];
        b.size += 1;
        b.charge += legCharge(pi, leg);
        b.parityBalance += (tourPosition(pi, leg) % 2 == 0) ? 1 : -1;
    }
    return st;
}

} // namespace

bool noncrossingOnStrip(const SetPartition& pi) {
    return noncrossingLabels(stripLabels(pi), pi.blockCount());
}

bool isMember(const Family& f, const SetPartition& pi) {
    using Tag = Family::Tag;
    const auto st = blockStats(pi);
    auto allSizes = [&](auto pred) {
        return std::all_of(st.begin(), st.end(), [&](const BlockStats& b) { return pred(b.size); });
    };
    auto allBlocks = [&](auto pred) {
        return std::all_of(st.begin(), st.end(), [&](const BlockStats& b) { return pred(b); });
    };
    switch (f.tag) {
        case Tag::P: break;
        case Tag::P2: case Tag::NC2:
            if (!allSizes([](int s) { return s == 2; })) return false;
            break;
        case Tag::P12: case Tag::NC12:
            if (!allSizes([](int s) { return s <= 2; })) return false;
            break;
        case Tag::Peven: case Tag::NCeven:
            if (!allSizes([](int s) { return s % 2 == 0; })) return false;
            break;
        case Tag::P2star:
            // Pairings whose strings join legs of opposite parity under the
            // alternating relabeling along the clockwise tour.
            if (!allBlocks([](const BlockStats& b) { return b.size == 2 && b.parityBalance == 0; }))
                return false;
            break;
        case Tag::PevenStar:
            if (!allBlocks([](const BlockStats& b) { return b.parityBalance == 0; })) return false;
            break;
        case Tag::MatchP2: case Tag::MatchNC2:
            if (!allBlocks([](const BlockStats& b) { return b.size == 2 && b.charge == 0; }))
                return false;
            break;
        case Tag::MatchP2star:
            if (!allBlocks([](const BlockStats& b) {
                    return b.size == 2 && b.charge == 0 && b.parityBalance == 0;
                }))
                return false;
            break;
        case Tag::MatchPeven: case Tag::MatchNCeven:
            if (!allBlocks([](const BlockStats& b) { return b.charge == 0; })) return false;
            break;
        case Tag::MatchPevenStar:
            if (!allBlocks([](const BlockStats& b) { return b.charge == 0 && b.parityBalance == 0; }))
                return false;
            break;
        case Tag::Ps: case Tag::NCs:
            if (!allBlocks([&](const BlockStats& b) { return ((b.charge % f.s) + f.s) % f.s == 0; }))
                return false;
            break;
    }
    if (f.noncrossing() && !noncrossingOnStrip(pi)) return false;
    return true;
}

namespace {

void enumeratePairings(const Family& f, const Word& upper, const Word& lower,
                       const std::function<void(const SetPartition&)>& visit) {
    const int n = static_cast<int>(upper.size() + lower.size());
    if (n % 2 != 0) return;
    std::vector<int> mate(static_cast<size_t>(n), -1);
    std::vector<int> labels(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int matched) -> void {
        if (matched == n) {
            int id = 0;
            std::vector<int> seen(static_cast<size_t>(n), -1);
            for (int i = 0; i < n; ++i) {
                if (seen[static_cast<size_t>(i)] == -1) {
                    seen[static_cast<size_t>(i)] = seen[static_cast<size_t>(mate[static_cast<size_t>(i)])] = id++;
                }
                labels[static_cast<size_t>(i)] = seen[static_cast<size_t>(i)];
            }
            SetPartition pi(upper, lower, labels);
            if (isMember(f, pi)) visit(pi);
            return;
        }
        int first = 0;
        while (mate[static_cast<size_t>(first)] != -1) ++first;
        for (int j = first + 1; j < n; ++j) {
            if (mate[static_cast<size_t>(j)] != -1) continue;
            mate[static_cast<size_t>(first)] = j;
            mate[static_cast<size_t>(j)] = first;
            self(self, matched + 2);
            mate[static_cast<size_t>(first)] = mate[static_cast<size_t>(j)] = -1;
        }
    };
    rec(rec, 0);
}

void enumerateAll(const Family& f, const Word& upper, const Word& lower,
                  const std::function<void(const SetPartition&)>& visit) {
    const int n = static_cast<int>(upper.size() + lower.size());
    std::vector<int> labels(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int t, int maxLabel) -> void {
        if (t == n) {
            SetPartition pi(upper, lower, labels);
            if (isMember(f, pi)) visit(pi);
            return;
        }
        for (int v = 0; v <= maxLabel + 1; ++v) {
            labels[static_cast<size_t>(t)] = v;
            self(self, t + 1, std::max(maxLabel, v));
        }
    };
    if (n == 0) {
        SetPartition pi(upper, lower, {});
        if (isMember(f, pi)) visit(pi);
        return;
    }
    rec(rec, 0, -1);
}

} // namespace

void forEachMember(const Family& f, const Word& upper, const Word& lower,
                   const std::function<void(const SetPartition&)>& visit) {
    if (f.colored() && !(isColored(upper) && isColored(lower)))
        throw DomainError("family " + f.name() + " requires a fully colored word");
    if (f.pairingsOnly())
        enumeratePairings(f, upper, lower, visit);
    else
        enumerateAll(f, upper, lower, visit);
}

std::vector<SetPartition> enumerateFamily(const Family& f, const Word& upper, const Word& lower,
                                          int legBound) {
    if (static_cast<int>(upper.size() + lower.size()) > legBound)
        throw SizeLimitError("leg count exceeds enumeration bound");
    std::vector<SetPartition> out;
    forEachMember(f, upper, lower, [&](const SetPartition& pi) { out.push_back(pi); });
    std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
        if (a.blockCount() != b.blockCount()) return a.blockCount() > b.blockCount();
        return a.labels() < b.labels();
    });
    return out;
}

std::uint64_t countFamily(const Family& f, const Word& upper, const Word& lower) {
    std::uint64_t n = 0;
    forEachMember(f, upper, lower, [&](const SetPartition&) { ++n; });
    return n;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

UnionFind joinUF(const SetPartition& pi, const SetPartition& sigma) {
    UnionFind uf(pi.legs());
    std::vector<int> firstOfPi(static_cast<size_t>(pi.blockCount()), -1);
    std::vector<int> firstOfSigma(static_cast<size_t>(sigma.blockCount()), -1);
    for (int leg = 0; leg < pi.legs(); ++leg) {
        int& fp = firstOfPi[static_cast<size_t>(pi.blockIndex(leg))];
        if (fp == -1) fp = leg; else uf.unite(fp, leg);
        int& fs = firstOfSigma[static_cast<size_t>(sigma.blockIndex(leg))];
        if (fs == -1) fs = leg; else uf.unite(fs, leg);
    }
    return uf;
}

} // namespace

SetPartition join(const SetPartition& pi, const SetPartition& sigma) {
    if (!pi.sameShape(sigma)) throw DomainError("join: mismatched leg structure");
    UnionFind uf = joinUF(pi, sigma);
    std::vector<int> labels(static_cast<size_t>(pi.legs()));
    for (int leg = 0; leg < pi.legs(); ++leg) labels[static_cast<size_t>(leg)] = uf.find(leg);
    return SetPartition(pi.upper(), pi.lower(), labels);
}

int joinBlockCount(const SetPartition& pi, const SetPartition& sigma) {
    if (!pi.sameShape(sigma)) throw DomainError("join: mismatched leg structure");
    UnionFind uf = joinUF(pi, sigma);
    int count = 0;
    for (int leg = 0; leg < pi.legs(); ++leg)
        if (uf.find(leg) == leg) ++count;
    return count;
}

bool leq(const SetPartition& pi, const SetPartition& sigma) {
    if (!pi.sameShape(sigma)) throw DomainError("leq: mismatched leg structure");
    std::vector<int> image(static_cast<size_t>(pi.blockCount()), -1);
    for (int leg = 0; leg < pi.legs(); ++leg) {
        int& img = image[static_cast<size_t>(pi.blockIndex(leg))];
        if (img == -1) img = sigma.blockIndex(leg);
        else if (img != sigma.blockIndex(leg)) return false;
    }
    return true;
}

namespace {

// All tau with pi <= tau <= sigma: independently partition, within each block
// of sigma, the set of pi-blocks it contains.
std::vector<SetPartition> interval(const SetPartition& pi, const SetPartition& sigma) {
    std::vector<std::vector<int>> groups(static_cast<size_t>(sigma.blockCount()));
    std::vector<int> seen(static_cast<size_t>(pi.blockCount()), 0);
    for (int leg = 0; leg < pi.legs(); ++leg) {
        int pb = pi.blockIndex(leg);
        if (!seen[static_cast<size_t>(pb)]) {
            seen[static_cast<size_t>(pb)] = 1;
            groups[static_cast<size_t>(sigma.blockIndex(leg))].push_back(pb);
        }
    }
    // Per-group set partitions in restricted-growth form.
    std::vector<std::vector<std::vector<int>>> perGroup;
    for (const auto& g : groups) {
        std::vector<std::vector<int>> parts;
        std::vector<int> lab(g.size(), 0);
        auto rec = [&](auto&& self, size_t t, int maxLabel) -> void {
            if (t == g.size()) {
                parts.push_back(lab);
                return;
            }
            for (int v = 0; v <= maxLabel + 1; ++v) {
                lab[t] = v;
                self(self, t + 1, std::max(maxLabel, v));
            }
        };
        if (g.empty()) parts.push_back({});
        else rec(rec, 0, -1);
        perGroup.push_back(std::move(parts));
    }
    std::vector<SetPartition> out;
    std::vector<size_t> choice(perGroup.size(), 0);
    while (true) {
        std::vector<int> labelOfPiBlock(static_cast<size_t>(pi.blockCount()));
        int base = 0;
        for (size_t gi = 0; gi < groups.size(); ++gi) {
            const auto& g = groups[gi];
            const auto& lab = perGroup[gi][choice[gi]];
            int used = 0;
            for (size_t m = 0; m < g.size(); ++m) {
                labelOfPiBlock[static_cast<size_t>(g[m])] = base + lab[m];
                used = std::max(used, lab[m] + 1);
            }
            base += used;
        }
        std::vector<int> legLabels(static_cast<size_t>(pi.legs()));
        for (int leg = 0; leg < pi.legs(); ++leg)
            legLabels[static_cast<size_t>(leg)] = labelOfPiBlock[static_cast<size_t>(pi.blockIndex(leg))];
        out.emplace_back(pi.upper(), pi.lower(), legLabels);
        size_t gi = 0;
        for (; gi < perGroup.size(); ++gi) {
            if (++choice[gi] < perGroup[gi].size()) break;
            choice[gi] = 0;
        }
        if (gi == perGroup.size()) break;
        if (perGroup.empty()) break;
    }
    return out;
}

} // namespace

long long moebius(const SetPartition& pi, const SetPartition& sigma) {
    if (!pi.sameShape(sigma)) throw DomainError("moebius: mismatched leg structure");
    if (!leq(pi, sigma)) return 0;
    if (pi == sigma) return 1;
    // Solve the defining recurrence over the whole interval at once, finest
    // elements first so every lower value is ready when needed.
    std::vector<SetPartition> box = interval(pi, sigma);
    std::sort(box.begin(), box.end(), [](const SetPartition& a, const SetPartition& b) {
        return a.blockCount() > b.blockCount();
    });
    std::vector<long long> mu(box.size(), 0);
    for (size_t t = 0; t < box.size(); ++t) {
        if (box[t] == pi) {
            mu[t] = 1;
            continue;
        }
        long long sum = 0;
        for (size_t r = 0; r < box.size(); ++r)
            if (r != t && leq(box[r], box[t])) sum += mu[r];
        mu[t] = -sum;
    }
    for (size_t t = 0; t < box.size(); ++t)
        if (box[t] == sigma) return mu[t];
    throw DomainError("moebius: interval did not contain its top");
}

SetPartition kernel(const std::vector<int>& indices) {
    if (indices.empty()) throw DomainError("kernel of an empty tuple");
    std::vector<int> labels(indices.begin(), indices.end());
    return SetPartition(Word{}, plainWord(static_cast<int>(indices.size())), labels);
}

int deltaSymbol(const SetPartition& pi, const std::vector<int>& iUpper, const std::vector<int>& jLower) {
    if (static_cast<int>(iUpper.size()) != pi.upperSize() ||
        static_cast<int>(jLower.size()) != pi.lowerSize())
        throw DomainError("deltaSymbol: index arity mismatch");
    std::vector<int> value(static_cast<size_t>(pi.blockCount()), -1);
    for (int leg = 0; leg < pi.legs(); ++leg) {
        int idx = leg < pi.upperSize() ? iUpper[static_cast<size_t>(leg)]
                                       : jLower[static_cast<size_t>(leg - pi.upperSize())];
        int& v = value[static_cast<size_t>(pi.blockIndex(leg))];
        if (v == -1) v = idx;
        else if (v != idx) return 0;
    }
    return 1;
}

int signature(const SetPartition& pi) {
    std::vector<int> sizes(static_cast<size_t>(pi.blockCount()), 0);
    for (int leg = 0; leg < pi.legs(); ++leg) ++sizes[static_cast<size_t>(pi.blockIndex(leg))];
    for (int s : sizes)
        if (s % 2 != 0) throw DomainError("signature requires even blocks");
    // Sorting each row by block rank (stably) yields a noncrossing standard
    // form; the parity of the adjacent swaps needed equals the parity of the
    // cross-block inversion count in each row.
    long long inversions = 0;
    auto countRow = [&](int from, int to) {
        for (int p = from; p < to; ++p)
            for (int q = p + 1; q < to; ++q)
                if (pi.blockIndex(p) > pi.blockIndex(q)) ++inversions;
    };
    countRow(0, pi.upperSize());
    countRow(pi.upperSize(), pi.legs());
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

const Word& singleRowOf(const SetPartition& pi, bool* onUpper) {
    if (pi.upperSize() == 0) {
        *onUpper = false;
        return pi.lower();
    }
    if (pi.lowerSize() == 0) {
        *onUpper = true;
        return pi.upper();
    }
    throw DomainError("expected a one-row partition");
}

} // namespace

SetPartition fatten(const SetPartition& pi) {
    bool onUpper = false;
    const Word& row = singleRowOf(pi, &onUpper);
    (void)row;
    if (!noncrossingOnStrip(pi)) throw DomainError("fatten requires a noncrossing partition");
    const int k = pi.legs();
    std::vector<std::vector<int>> pairs;
    for (const auto& block : pi.blocks()) {
        const size_t m = block.size();
        for (size_t idx = 0; idx < m; ++idx) {
            int a = block[idx];
            int b = block[(idx + 1) % m];
            pairs.push_back({2 * a, 2 * b - 1});
        }
    }
    Word w = plainWord(2 * k);
    return onUpper ? SetPartition::fromBlocks(w, Word{}, pairs)
                   : SetPartition::fromBlocks(Word{}, w, pairs);
}

SetPartition shrink(const SetPartition& pairing) {
    bool onUpper = false;
    const Word& row = singleRowOf(pairing, &onUpper);
    (void)row;
    if (pairing.legs() % 2 != 0) throw DomainError("shrink requires an even leg count");
    for (const auto& b : pairing.blocks())
        if (b.size() != 2) throw DomainError("shrink requires a pairing");
    const int k = pairing.legs() / 2;
    UnionFind uf(k);
    for (const auto& b : pairing.blocks()) uf.unite((b[0] + 1) / 2 - 1, (b[1] + 1) / 2 - 1);
    std::vector<int> labels(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) labels[static_cast<size_t>(i)] = uf.find(i);
    Word w = plainWord(k);
    return onUpper ? SetPartition(w, Word{}, labels) : SetPartition(Word{}, w, labels);
}

} // namespace eqg
