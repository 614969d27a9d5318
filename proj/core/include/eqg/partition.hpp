#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "eqg/errors.hpp"

namespace eqg {

enum class Color : std::uint8_t { White, Black, Plain };

inline Color complement(Color c) {
    if (c == Color::White) return Color::Black;
    if (c == Color::Black) return Color::White;
    return Color::Plain;
}

using Word = std::vector<Color>;

Word plainWord(int n);
Word parseWord(const std::string& s); // over {o,b,-}
std::string wordToString(const Word& w);
inline bool isColored(const Word& w) {
    for (Color c : w)
        if (c == Color::Plain) return false;
    return true;
}

// Two-row partition. Legs are numbered 0..k-1 (upper, left to right) then
// k..k+l-1 (lower, left to right). Block labels are kept in restricted-growth
// form over that leg order, so equal partitions have identical label vectors.
class SetPartition {
public:
    SetPartition() = default;
    SetPartition(Word upper, Word lower, std::vector<int> blockOf);
    static SetPartition fromBlocks(const Word& upper, const Word& lower,
                                   const std::vector<std::vector<int>>& oneBasedBlocks);
    static SetPartition singleBlock(const Word& upper, const Word& lower);

    int upperSize() const { return static_cast<int>(upper_.size()); }
    int lowerSize() const { return static_cast<int>(lower_.size()); }
    int legs() const { return static_cast<int>(blockOf_.size()); }
    const Word& upper() const { return upper_; }
    const Word& lower() const { return lower_; }
    Color colorOf(int leg) const {
        return leg < upperSize() ? upper_[leg] : lower_[leg - upperSize()];
    }
    bool isUpper(int leg) const { return leg < upperSize(); }

    int blockIndex(int leg) const { return blockOf_[leg]; }
    const std::vector<int>& labels() const { return blockOf_; }
    int blockCount() const { return blockCount_; }
    std::vector<std::vector<int>> blocks() const; // 1-based legs, upper first

    bool sameShape(const SetPartition& o) const {
        return upper_ == o.upper_ && lower_ == o.lower_;
    }
    bool operator==(const SetPartition& o) const {
        return upper_ == o.upper_ && lower_ == o.lower_ && blockOf_ == o.blockOf_;
    }
    bool operator<(const SetPartition& o) const;
    std::string key() const;

private:
    Word upper_, lower_;
    std::vector<int> blockOf_;
    int blockCount_ = 0;
};

struct Family {
    enum class Tag {
        P, P2, P2star, NC, NC2, P12, NC12, Peven, NCeven, PevenStar,
        MatchP2, MatchNC2, MatchP2star, MatchPeven, MatchNCeven, MatchPevenStar,
        Ps, NCs
    };
    Tag tag = Tag::P;
    int s = 1; // modulus for Ps/NCs

    static Family parse(const std::string& name);
    std::string name() const;
    bool pairingsOnly() const;
    bool noncrossing() const;
    bool colored() const; // requires fully colored words
};

bool noncrossingOnStrip(const SetPartition& pi);
bool isMember(const Family& f, const SetPartition& pi);

inline constexpr int kDefaultLegBound = 12;

// All members with the given leg structure, canonical basis order:
// block count descending, then lexicographic on the label vector.
std::vector<SetPartition> enumerateFamily(const Family& f, const Word& upper, const Word& lower,
                                          int legBound = kDefaultLegBound);
// Unbounded visitor (enumeration order, not basis order).
void forEachMember(const Family& f, const Word& upper, const Word& lower,
                   const std::function<void(const SetPartition&)>& visit);
std::uint64_t countFamily(const Family& f, const Word& upper, const Word& lower);

SetPartition join(const SetPartition& pi, const SetPartition& sigma);
bool leq(const SetPartition& pi, const SetPartition& sigma);
long long moebius(const SetPartition& pi, const SetPartition& sigma);
int joinBlockCount(const SetPartition& pi, const SetPartition& sigma);

SetPartition kernel(const std::vector<int>& indices); // one-row, plain colors
int deltaSymbol(const SetPartition& pi, const std::vector<int>& iUpper, const std::vector<int>& jLower);

int signature(const SetPartition& pi); // +1/-1, even blocks required

SetPartition fatten(const SetPartition& pi); // NC(k) one-row -> NC2(2k)
SetPartition shrink(const SetPartition& pairing); // inverse

} // namespace eqg
