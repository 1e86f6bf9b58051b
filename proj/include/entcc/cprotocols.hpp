#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "entcc/functions.hpp"
#include "entcc/rational.hpp"
#include "entcc/transcript.hpp"

namespace entcc {

// One input value (0..3) per party; entry [2] is unused for two parties.
using PartyValues = std::array<int, 3>;
using TargetFn = std::function<int(const PartyValues&)>;

struct InputSet {
    int party_count = 3;
    std::vector<PartyValues> members;
};

InputSet promise_triple_set();  // the 32 promise triples as PartyValues
InputSet all_pair_set();        // all 16 pairs

// Deterministic broadcast protocol tree. Internal nodes name a sender and
// a message function of the sender's own input value; leaves carry the
// common output. message_table bit v is the bit broadcast when the
// sender's value is v.
struct ProtocolTree {
    struct Node;
    using NodeRef = std::shared_ptr<const Node>;

    struct Node {
        bool is_leaf = true;
        int label = 0;                // leaves only
        Party sender = Party::Alice;  // internal nodes only
        std::uint8_t message_table = 0;
        NodeRef on_zero, on_one;  // child taken per broadcast bit
    };

    NodeRef root;
    int party_count = 3;
    int depth = 0;  // declared bound; every leaf sits at depth <= depth
};

ProtocolTree::NodeRef make_leaf(int label);
ProtocolTree::NodeRef make_node(Party sender, std::uint8_t message_table,
                                ProtocolTree::NodeRef on_zero, ProtocolTree::NodeRef on_one);

struct EvalResult {
    Transcript transcript;
    int output = 0;
};

// Root-to-leaf walk: each internal node broadcasts message_table[input of
// its sender] and descends to the matching child.
EvalResult evaluate(const ProtocolTree& tree, const PartyValues& input);
EvalResult evaluate(const ProtocolTree& tree, const TripleInput& t);
EvalResult evaluate(const ProtocolTree& tree, const PairInput& p);

// True iff every root-to-leaf path carries all three party labels.
bool covers_all_parties(const ProtocolTree& tree);

struct FeasibilityResult {
    bool feasible = false;
    ProtocolTree witness;      // meaningful only when feasible
    std::size_t explored = 0;  // memo entries created by the search
};

// Exact decision: does some tree of depth <= depth compute target on every
// member of inputs (common leaf labels)? Complete search over senders and
// the 7 nonconstant bipartitions of a sender's four values, memoized on
// (surviving input set, remaining depth). Splits that leave one side empty
// convey nothing on the surviving set and are skipped; the same set is
// reachable one level shallower instead.
FeasibilityResult feasible(const TargetFn& target, const InputSet& inputs, int depth);

// Parenthesized text form: leaf "(0)"; node "(A 0101 <on_zero> <on_one>)"
// where table char v is the bit broadcast for sender value v.
std::string serialize_tree(const ProtocolTree& tree);
ProtocolTree parse_tree(std::string_view text, int party_count);

// Two-bit tree configuration: root sender, the sender of each child, and
// the root partition class sizes (size0 counts the values mapped to
// broadcast bit 0).
struct TreeShape {
    Party root = Party::Alice;
    Party branch0 = Party::Alice;
    Party branch1 = Party::Alice;
    int size0 = 0;
    int size1 = 0;
    auto operator<=>(const TreeShape&) const = default;
};

struct SuccessReport {
    Rational best{0};
    std::string best_tree;                // argmax configuration description
    std::map<TreeShape, Rational> table;  // per-configuration maxima
};

// Exhaustive scan of every deterministic two-bit two-party tree against
// g_value under uniform inputs. Each complete transcript selects an input
// rectangle; both parties get optimal decoders over (transcript, own
// input) and a run counts only when both outputs equal g. The overall
// maximum is exactly 3/4.
SuccessReport max_success_two_bit();

// Best conditional success of a decoder that knows its own input and only
// that the other side's value lies in some class of the given size;
// maximized over all classes of that size. Returns 1, 3/4, 2/3 for sizes
// 1, 2, 3.
Rational decoder_success_bound(int class_size);

struct DepthSuccess {
    Rational best{0};
    std::size_t explored = 0;  // dynamic-program states touched
};

// Depth-limited optimum of the same both-correct objective for g_value
// (depth 0..3), via a dynamic program over input rectangles. Agrees with
// max_success_two_bit at depth 2.
DepthSuccess best_success_at_depth(int depth);

// Concrete broadcast protocols matching the search bounds: an errorless
// four-bit protocol for f on the promise set and an errorless three-bit
// protocol for g.
EvalResult four_bit_protocol(const TripleInput& t);
EvalResult three_bit_protocol(const PairInput& p);

}  // namespace entcc
