#include "eqg/serialize.hpp"

#include <cctype>
#include <sstream>

namespace eqg {

std::string blockListString(const SetPartition& pi) {
    std::string out = "[";
    bool firstBlock = true;
    for (const auto& block : pi.blocks()) {
        if (!firstBlock) out += ",";
        firstBlock = false;
        out += "[";
        for (size_t i = 0; i < block.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(block[i]);
        }
        out += "]";
    }
    return out + "]";
}

std::string partitionToText(const SetPartition& pi) {
    return wordToString(pi.upper()) + "/" + wordToString(pi.lower()) + " " + blockListString(pi);
}

namespace {

void skipSpace(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

void expect(const std::string& s, size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c)
        throw DomainError("partition text: expected '" + std::string(1, c) + "' at position " +
                          std::to_string(pos));
    ++pos;
}

int parseInt(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw DomainError("partition text: expected a leg number");
    return std::stoi(s.substr(start, pos - start));
}

} // namespace

SetPartition parsePartitionText(const std::string& text) {
    size_t pos = 0;
    skipSpace(text, pos);
    size_t rowEnd = text.find_first_of(" \t[", pos);
    if (rowEnd == std::string::npos) throw DomainError("partition text: missing block list");
    std::string rows = text.substr(pos, rowEnd - pos);
    size_t slash = rows.find('/');
    if (slash == std::string::npos) throw DomainError("partition text: rows need a '/' separator");
    Word upper = parseWord(rows.substr(0, slash));
    Word lower = parseWord(rows.substr(slash + 1));
    pos = rowEnd;
    skipSpace(text, pos);
    expect(text, pos, '[');
    std::vector<std::vector<int>> blocks;
    skipSpace(text, pos);
    while (pos < text.size() && text[pos] != ']') {
        expect(text, pos, '[');
        std::vector<int> block;
        skipSpace(text, pos);
        while (pos < text.size() && text[pos] != ']') {
            block.push_back(parseInt(text, pos));
            skipSpace(text, pos);
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                skipSpace(text, pos);
            }
        }
        expect(text, pos, ']');
        blocks.push_back(std::move(block));
        skipSpace(text, pos);
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skipSpace(text, pos);
        }
    }
    expect(text, pos, ']');
    return SetPartition::fromBlocks(upper, lower, blocks);
}

std::string ratToString(const Rat& r) {
    if (denString(r) == "1") return numString(r);
    return numString(r) + "/" + denString(r);
}

Rat parseRat(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int den(s.substr(slash + 1));
        if (den == 0) throw DomainError("rational: zero denominator");
        return Rat(Int(s.substr(0, slash)), den);
    } catch (const std::exception&) {
        throw DomainError("cannot parse rational '" + s + "'");
    }
}

std::vector<int> parseIntList(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw DomainError("empty entry in integer list '" + s + "'");
        out.push_back(std::stoi(item));
    }
    return out;
}

} // namespace eqg
