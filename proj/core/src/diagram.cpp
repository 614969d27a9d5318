#include "eqg/diagram.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace eqg {

SetPartition tensor(const SetPartition& pi, const SetPartition& sigma) {
    const int k1 = pi.upperSize(), l1 = pi.lowerSize();
    const int k2 = sigma.upperSize(), l2 = sigma.lowerSize();
    Word upper = pi.upper();
    upper.insert(upper.end(), sigma.upper().begin(), sigma.upper().end());
    Word lower = pi.lower();
    lower.insert(lower.end(), sigma.lower().begin(), sigma.lower().end());
    std::vector<int> labels(static_cast<size_t>(k1 + k2 + l1 + l2));
    const int off = pi.blockCount();
    for (int i = 0; i < k1; ++i) labels[static_cast<size_t>(i)] = pi.blockIndex(i);
    for (int i = 0; i < k2; ++i) labels[static_cast<size_t>(k1 + i)] = off + sigma.blockIndex(i);
    for (int j = 0; j < l1; ++j) labels[static_cast<size_t>(k1 + k2 + j)] = pi.blockIndex(k1 + j);
    for (int j = 0; j < l2; ++j)
        labels[static_cast<size_t>(k1 + k2 + l1 + j)] = off + sigma.blockIndex(k2 + j);
    return SetPartition(std::move(upper), std::move(lower), std::move(labels));
}

CompositionResult compose(const SetPartition& pi, const SetPartition& sigma) {
    if (pi.lower() != sigma.upper())
        throw DomainError("compose: middle words do not match");
    const int k = pi.upperSize(), m = pi.lowerSize(), l = sigma.lowerSize();
    // Nodes: pi legs (0..k+m-1), then sigma legs (k+m..k+m+m+l-1).
    const int total = k + m + m + l;
    std::vector<int> parent(static_cast<size_t>(total));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    auto uniteBlocks = [&](const SetPartition& part, int offset) {
        std::vector<int> first(static_cast<size_t>(part.blockCount()), -1);
        for (int leg = 0; leg < part.legs(); ++leg) {
            int& f = first[static_cast<size_t>(part.blockIndex(leg))];
            if (f == -1) f = offset + leg;
            else unite(f, offset + leg);
        }
    };
    uniteBlocks(pi, 0);
    uniteBlocks(sigma, k + m);
    for (int i = 0; i < m; ++i) unite(k + i, k + m + i);

    std::vector<char> hasBoundary(static_cast<size_t>(total), 0);
    std::vector<char> present(static_cast<size_t>(total), 0);
    std::vector<int> labels(static_cast<size_t>(k + l));
    for (int i = 0; i < k; ++i) {
        int r = find(i);
        hasBoundary[static_cast<size_t>(r)] = 1;
        labels[static_cast<size_t>(i)] = r;
    }
    for (int j = 0; j < l; ++j) {
        int r = find(k + m + m + j);
        hasBoundary[static_cast<size_t>(r)] = 1;
        labels[static_cast<size_t>(k + j)] = r;
    }
    int loops = 0;
    for (int i = 0; i < m; ++i) {
        int r = find(k + i);
        if (!present[static_cast<size_t>(r)]) {
            present[static_cast<size_t>(r)] = 1;
            if (!hasBoundary[static_cast<size_t>(r)]) ++loops;
        }
    }
    return CompositionResult{SetPartition(pi.upper(), sigma.lower(), std::move(labels)), loops};
}

SetPartition involute(const SetPartition& pi) {
    const int k = pi.upperSize(), l = pi.lowerSize();
    Word upper(static_cast<size_t>(l)), lower(static_cast<size_t>(k));
    for (int j = 0; j < l; ++j) upper[static_cast<size_t>(j)] = complement(pi.lower()[static_cast<size_t>(j)]);
    for (int i = 0; i < k; ++i) lower[static_cast<size_t>(i)] = complement(pi.upper()[static_cast<size_t>(i)]);
    std::vector<int> labels(static_cast<size_t>(k + l));
    for (int j = 0; j < l; ++j) labels[static_cast<size_t>(j)] = pi.blockIndex(k + j);
    for (int i = 0; i < k; ++i) labels[static_cast<size_t>(l + i)] = pi.blockIndex(i);
    return SetPartition(std::move(upper), std::move(lower), std::move(labels));
}

SetPartition rotate(const SetPartition& pi) {
    const int k = pi.upperSize(), l = pi.lowerSize();
    if (k + l == 0) throw DomainError("rotate: empty partition");
    Word upper(static_cast<size_t>(k)), lower(static_cast<size_t>(l));
    std::vector<int> labels(static_cast<size_t>(k + l));
    // legOf[p]: the old leg occupying new position p (upper 0..k-1, lower k..k+l-1).
    auto place = [&](int newPos, int oldLeg, bool flip) {
        Color c = pi.colorOf(oldLeg);
        if (flip) c = complement(c);
        if (newPos < k) upper[static_cast<size_t>(newPos)] = c;
        else lower[static_cast<size_t>(newPos - k)] = c;
        labels[static_cast<size_t>(newPos)] = pi.blockIndex(oldLeg);
    };
    if (k > 0 && l > 0) {
        for (int i = 1; i < k; ++i) place(i - 1, i, false);
        place(k - 1, k + l - 1, true);     // bottom-right corner crossing
        place(k, 0, true);                 // top-left corner crossing
        for (int j = 0; j < l - 1; ++j) place(k + 1 + j, k + j, false);
    } else if (k == 0) {
        place(0, l - 1, false);            // wraps through both corners
        for (int j = 0; j < l - 1; ++j) place(1 + j, j, false);
    } else {
        for (int i = 1; i < k; ++i) place(i - 1, i, false);
        place(k - 1, 0, false);
    }
    return SetPartition(std::move(upper), std::move(lower), std::move(labels));
}

const std::vector<SetPartition>* GeneratedCategory::cell(const Word& upper, const Word& lower) const {
    auto it = members.find({wordToString(upper), wordToString(lower)});
    return it == members.end() ? nullptr : &it->second;
}

GeneratedCategory generateCategory(const std::vector<SetPartition>& generators, int sizeBound,
                                   int ceiling) {
    if (sizeBound > ceiling) throw SizeLimitError("generateCategory: size bound exceeds ceiling");
    std::set<SetPartition> seen;
    std::deque<SetPartition> work;
    auto push = [&](const SetPartition& p) {
        if (p.legs() > sizeBound) return;
        if (seen.insert(p).second) work.push_back(p);
    };
    push(SetPartition::fromBlocks(plainWord(1), plainWord(1), {{1, 2}}));
    push(SetPartition::fromBlocks(Word{}, plainWord(2), {{1, 2}}));
    push(SetPartition::fromBlocks(plainWord(2), Word{}, {{1, 2}}));
    for (const auto& g : generators) push(g);

    while (!work.empty()) {
        SetPartition x = work.front();
        work.pop_front();
        push(involute(x));
        if (x.legs() > 0) push(rotate(x));
        // Snapshot: anything added during the loop will itself be processed later.
        std::vector<SetPartition> current(seen.begin(), seen.end());
        for (const auto& y : current) {
            if (x.legs() + y.legs() <= sizeBound) {
                push(tensor(x, y));
                push(tensor(y, x));
            }
            if (x.lower() == y.upper()) push(compose(x, y).partition);
            if (y.lower() == x.upper()) push(compose(y, x).partition);
        }
    }

    GeneratedCategory cat;
    cat.generators = generators;
    cat.sizeBound = sizeBound;
    for (const auto& p : seen)
        cat.members[{wordToString(p.upper()), wordToString(p.lower())}].push_back(p);
    for (auto& [cell, list] : cat.members) {
        (void)cell;
        std::sort(list.begin(), list.end(), [](const SetPartition& a, const SetPartition& b) {
            if (a.blockCount() != b.blockCount()) return a.blockCount() > b.blockCount();
            return a.labels() < b.labels();
        });
    }
    return cat;
}

Int tlTrace(const SetPartition& pi, int N) {
    const int k = pi.upperSize();
    if (k != pi.lowerSize()) throw DomainError("tlTrace: needs equal upper/lower leg counts");
    for (const auto& b : pi.blocks())
        if (b.size() != 2) throw DomainError("tlTrace: needs a pairing");
    std::vector<int> parent(static_cast<size_t>(2 * k));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    for (const auto& b : pi.blocks()) unite(b[0] - 1, b[1] - 1);
    for (int i = 0; i < k; ++i) unite(i, k + i);
    int loops = 0;
    for (int i = 0; i < 2 * k; ++i)
        if (find(i) == i) ++loops;
    return intPow(Int(N), static_cast<unsigned>(loops));
}

} // namespace eqg
