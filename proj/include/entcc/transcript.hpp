#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace entcc {

enum class Party : int { Alice = 0, Bob = 1, Carol = 2 };

inline char party_letter(Party p) {
    switch (p) {
        case Party::Alice: return 'A';
        case Party::Bob: return 'B';
        case Party::Carol: return 'C';
    }
    throw std::invalid_argument("invalid party");
}

inline Party party_from_letter(char c) {
    switch (c) {
        case 'A': return Party::Alice;
        case 'B': return Party::Bob;
        case 'C': return Party::Carol;
    }
    throw std::invalid_argument(std::string("unknown party letter '") + c + "'");
}

// One broadcast bit together with who sent it.
struct TranscriptEntry {
    Party sender = Party::Alice;
    int bit = 0;
    bool operator==(const TranscriptEntry&) const = default;
};

using Transcript = std::vector<TranscriptEntry>;

// "A0B1C0" rendering used in reports.
inline std::string transcript_string(const Transcript& t) {
    std::string s;
    for (const auto& e : t) {
        s += party_letter(e.sender);
        s += static_cast<char>('0' + e.bit);
    }
    return s;
}

}  // namespace entcc
