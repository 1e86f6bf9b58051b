#include "entcc/cprotocols.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace entcc {

namespace {

// The 7 nonconstant message tables with value 0 kept in class 0, in
// lexicographic order of the table string (bit v = class of value v).
// The other 8 nonconstant tables are these negated, which only swaps the
// children; the 2 constant tables convey nothing.
constexpr std::array<std::uint8_t, 7> kCanonicalTables{0x8, 0x4, 0xC, 0x2, 0xA, 0x6, 0xE};

std::string table_string(std::uint8_t table) {
    std::string s(4, '0');
    for (int v = 0; v < 4; ++v) {
        if (table >> v & 1) s[static_cast<std::size_t>(v)] = '1';
    }
    return s;
}

void require_party_count(int party_count) {
    if (party_count != 2 && party_count != 3) {
        throw std::invalid_argument("party count must be 2 or 3");
    }
}

// Depth-limited exhaustive search with memoization over (surviving input
// set, remaining depth). Masks index into the sorted member list.
class FeasibilitySearch {
public:
    FeasibilitySearch(const TargetFn& target, const InputSet& inputs)
        : party_count_(inputs.party_count) {
        require_party_count(party_count_);
        if (inputs.members.empty()) throw std::invalid_argument("input set is empty");
        members_ = inputs.members;
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (members_.size() > 64) throw std::invalid_argument("input set larger than 64");
        values_.reserve(members_.size());
        for (const auto& m : members_) {
            for (int p = 0; p < party_count_; ++p) {
                if (m[static_cast<std::size_t>(p)] < 0 || m[static_cast<std::size_t>(p)] > 3) {
                    throw std::invalid_argument("input value out of range 0..3");
                }
            }
            const int v = target(m);
            if (v != 0 && v != 1) throw std::invalid_argument("target values must be 0 or 1");
            values_.push_back(v);
        }
    }

    FeasibilityResult run(int depth) {
        if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
        memo_.assign(static_cast<std::size_t>(depth) + 1, {});
        const std::uint64_t full =
            members_.size() == 64 ? ~0ull : (1ull << members_.size()) - 1;
        const Entry root = solve(full, depth);
        FeasibilityResult result;
        result.feasible = root.ok;
        for (const auto& level : memo_) result.explored += level.size();
        if (root.ok) result.witness = ProtocolTree{root.witness, party_count_, depth};
        return result;
    }

private:
    struct Entry {
        bool ok = false;
        ProtocolTree::NodeRef witness;
    };

    Entry solve(std::uint64_t mask, int depth) {
        auto& level = memo_[static_cast<std::size_t>(depth)];
        if (const auto it = level.find(mask); it != level.end()) return it->second;

        Entry entry;
        int first = -1;
        bool constant = true;
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            if (first < 0) {
                first = values_[i];
            } else if (values_[i] != first) {
                constant = false;
                break;
            }
        }
        if (constant) {
            entry.ok = true;
            entry.witness = make_leaf(first < 0 ? 0 : first);
        } else if (depth > 0) {
            // Scan order fixes the witness: senders A < B < C, tables in
            // canonical order.
            for (int sender = 0; sender < party_count_ && !entry.ok; ++sender) {
                for (const std::uint8_t table : kCanonicalTables) {
                    std::uint64_t m0 = 0, m1 = 0;
                    for (std::size_t i = 0; i < members_.size(); ++i) {
                        if (!(mask >> i & 1)) continue;
                        const int value = members_[i][static_cast<std::size_t>(sender)];
                        if (table >> value & 1) {
                            m1 |= 1ull << i;
                        } else {
                            m0 |= 1ull << i;
                        }
                    }
                    // An empty side means the bit conveys nothing about the
                    // surviving set, so the set must already be solvable
                    // with one bit fewer, and a deeper budget only helps.
                    // Skipping also keeps every witness path inhabited.
                    if (m0 == 0 || m1 == 0) continue;
                    const Entry r0 = solve(m0, depth - 1);
                    if (!r0.ok) continue;
                    const Entry r1 = solve(m1, depth - 1);
                    if (!r1.ok) continue;
                    entry.ok = true;
                    entry.witness =
                        make_node(static_cast<Party>(sender), table, r0.witness, r1.witness);
                    break;
                }
            }
        }
        memo_[static_cast<std::size_t>(depth)].emplace(mask, entry);
        return entry;
    }

    int party_count_;
    std::vector<PartyValues> members_;
    std::vector<int> values_;
    std::vector<std::unordered_map<std::uint64_t, Entry>> memo_;
};

// Count of inputs in the rectangle (xmask, ymask) on which both parties'
// best decoders output g; decoders range over every function of the own
// input within the rectangle.
int best_cell_count(int xmask, int ymask, const std::array<std::array<int, 4>, 4>& g_table) {
    std::array<int, 4> xs{}, ys{};
    int nx = 0, ny = 0;
    for (int v = 0; v < 4; ++v) {
        if (xmask >> v & 1) xs[static_cast<std::size_t>(nx++)] = v;
        if (ymask >> v & 1) ys[static_cast<std::size_t>(ny++)] = v;
    }
    if (nx == 0 || ny == 0) return 0;
    int best = 0;
    for (int a = 0; a < (1 << nx); ++a) {
        for (int b = 0; b < (1 << ny); ++b) {
            int count = 0;
            for (int i = 0; i < nx; ++i) {
                for (int j = 0; j < ny; ++j) {
                    const int guess_a = a >> i & 1;
                    const int guess_b = b >> j & 1;
                    if (guess_a == guess_b &&
                        guess_a == g_table[static_cast<std::size_t>(xs[static_cast<std::size_t>(i)])]
                                          [static_cast<std::size_t>(ys[static_cast<std::size_t>(j)])]) {
                        ++count;
                    }
                }
            }
            best = std::max(best, count);
        }
    }
    return best;
}

std::array<std::array<int, 4>, 4> g_lookup() {
    std::array<std::array<int, 4>, 4> table{};
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) {
            table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = g_value({x, y});
        }
    }
    return table;
}

using CellTable = std::array<std::array<int, 16>, 16>;

CellTable build_cell_table() {
    const auto g_table = g_lookup();
    CellTable cells{};
    for (int xm = 0; xm < 16; ++xm) {
        for (int ym = 0; ym < 16; ++ym) {
            cells[static_cast<std::size_t>(xm)][static_cast<std::size_t>(ym)] =
                best_cell_count(xm, ym, g_table);
        }
    }
    return cells;
}

const CellTable& cell_table() {
    static const CellTable cells = build_cell_table();
    return cells;
}

}  // namespace

InputSet promise_triple_set() {
    InputSet set{3, {}};
    for (const TripleInput& t : promise_triples()) set.members.push_back({t.x, t.y, t.z});
    return set;
}

InputSet all_pair_set() {
    InputSet set{2, {}};
    for (const PairInput& p : all_pairs()) set.members.push_back({p.x, p.y, 0});
    return set;
}

ProtocolTree::NodeRef make_leaf(int label) {
    if (label != 0 && label != 1) throw std::invalid_argument("leaf label must be 0 or 1");
    auto node = std::make_shared<ProtocolTree::Node>();
    node->is_leaf = true;
    node->label = label;
    return node;
}

ProtocolTree::NodeRef make_node(Party sender, std::uint8_t message_table,
                                ProtocolTree::NodeRef on_zero, ProtocolTree::NodeRef on_one) {
    if (message_table > 0xF) throw std::invalid_argument("message table uses 4 bits");
    auto node = std::make_shared<ProtocolTree::Node>();
    node->is_leaf = false;
    node->sender = sender;
    node->message_table = message_table;
    node->on_zero = std::move(on_zero);
    node->on_one = std::move(on_one);
    return node;
}

EvalResult evaluate(const ProtocolTree& tree, const PartyValues& input) {
    require_party_count(tree.party_count);
    for (int p = 0; p < tree.party_count; ++p) {
        if (input[static_cast<std::size_t>(p)] < 0 || input[static_cast<std::size_t>(p)] > 3) {
            throw std::domain_error("party value out of range 0..3");
        }
    }
    if (!tree.root) throw std::invalid_argument("protocol tree has no root");

    EvalResult result;
    const ProtocolTree::Node* node = tree.root.get();
    while (!node->is_leaf) {
        const int sender = static_cast<int>(node->sender);
        if (sender < 0 || sender >= tree.party_count) {
            throw std::invalid_argument("node sender outside the party count");
        }
        const int bit = node->message_table >> input[static_cast<std::size_t>(sender)] & 1;
        result.transcript.push_back({node->sender, bit});
        const ProtocolTree::NodeRef& next = bit ? node->on_one : node->on_zero;
        if (!next) throw std::invalid_argument("protocol tree node is missing a child");
        node = next.get();
    }
    result.output = node->label;
    return result;
}

EvalResult evaluate(const ProtocolTree& tree, const TripleInput& t) {
    if (tree.party_count != 3) throw std::invalid_argument("tree is not three-party");
    return evaluate(tree, PartyValues{t.x, t.y, t.z});
}

EvalResult evaluate(const ProtocolTree& tree, const PairInput& p) {
    if (tree.party_count != 2) throw std::invalid_argument("tree is not two-party");
    return evaluate(tree, PartyValues{p.x, p.y, 0});
}

namespace {

bool covers_from(const ProtocolTree::NodeRef& node, unsigned seen) {
    if (!node) throw std::invalid_argument("protocol tree node is missing a child");
    if (node->is_leaf) return seen == 0b111u;
    seen |= 1u << static_cast<int>(node->sender);
    return covers_from(node->on_zero, seen) && covers_from(node->on_one, seen);
}

}  // namespace

bool covers_all_parties(const ProtocolTree& tree) {
    if (tree.party_count != 3) throw std::invalid_argument("label coverage is a three-party check");
    if (!tree.root) throw std::invalid_argument("protocol tree has no root");
    return covers_from(tree.root, 0);
}

FeasibilityResult feasible(const TargetFn& target, const InputSet& inputs, int depth) {
    FeasibilitySearch search(target, inputs);
    return search.run(depth);
}

namespace {

void serialize_node(const ProtocolTree::NodeRef& node, std::string& out) {
    if (!node) throw std::invalid_argument("cannot serialize a tree with missing nodes");
    out += '(';
    if (node->is_leaf) {
        out += static_cast<char>('0' + node->label);
    } else {
        out += party_letter(node->sender);
        out += ' ';
        out += table_string(node->message_table);
        out += ' ';
        serialize_node(node->on_zero, out);
        out += ' ';
        serialize_node(node->on_one, out);
    }
    out += ')';
}

class TreeParser {
public:
    TreeParser(std::string_view text, int party_count) : text_(text), party_count_(party_count) {}

    ProtocolTree parse() {
        ProtocolTree tree;
        tree.party_count = party_count_;
        int depth = 0;
        tree.root = parse_node(0, depth);
        skip_spaces();
        if (pos_ != text_.size()) throw std::invalid_argument("trailing characters after tree");
        tree.depth = depth;
        return tree;
    }

private:
    void skip_spaces() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }

    char take() {
        if (pos_ >= text_.size()) throw std::invalid_argument("unexpected end of tree text");
        return text_[pos_++];
    }

    void expect(char c) {
        if (take() != c) {
            throw std::invalid_argument(std::string("expected '") + c + "' in tree text");
        }
    }

    ProtocolTree::NodeRef parse_node(int depth, int& max_depth) {
        skip_spaces();
        expect('(');
        skip_spaces();
        const char head = take();
        if (head == '0' || head == '1') {
            skip_spaces();
            expect(')');
            max_depth = std::max(max_depth, depth);
            return make_leaf(head - '0');
        }
        const Party sender = party_from_letter(head);
        if (static_cast<int>(sender) >= party_count_) {
            throw std::invalid_argument("sender outside the party count");
        }
        skip_spaces();
        std::uint8_t table = 0;
        for (int v = 0; v < 4; ++v) {
            const char bit = take();
            if (bit != '0' && bit != '1') {
                throw std::invalid_argument("message table must be 4 binary digits");
            }
            if (bit == '1') table |= static_cast<std::uint8_t>(1u << v);
        }
        ProtocolTree::NodeRef on_zero = parse_node(depth + 1, max_depth);
        ProtocolTree::NodeRef on_one = parse_node(depth + 1, max_depth);
        skip_spaces();
        expect(')');
        return make_node(sender, table, std::move(on_zero), std::move(on_one));
    }

    std::string_view text_;
    int party_count_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_tree(const ProtocolTree& tree) {
    std::string out;
    serialize_node(tree.root, out);
    return out;
}

ProtocolTree parse_tree(std::string_view text, int party_count) {
    require_party_count(party_count);
    return TreeParser(text, party_count).parse();
}

SuccessReport max_success_two_bit() {
    const CellTable& cells = cell_table();
    SuccessReport report;
    report.best = Rational(0);

    // Scan order fixes the argmax: root sender A then B, root table
    // 0..15, then branch-0 sender/table, then branch-1 sender/table.
    for (int root = 0; root < 2; ++root) {
        for (int t0 = 0; t0 < 16; ++t0) {
            const int class1 = t0;
            const int class0 = ~t0 & 0xF;
            for (int c0 = 0; c0 < 2; ++c0) {
                for (int t1 = 0; t1 < 16; ++t1) {
                    for (int c1 = 0; c1 < 2; ++c1) {
                        for (int t2 = 0; t2 < 16; ++t2) {
                            int total = 0;
                            for (int branch = 0; branch < 2; ++branch) {
                                const int branch_class = branch == 0 ? class0 : class1;
                                const int sender = branch == 0 ? c0 : c1;
                                const int table = branch == 0 ? t1 : t2;
                                const int xm = root == 0 ? branch_class : 0xF;
                                const int ym = root == 0 ? 0xF : branch_class;
                                for (int leaf = 0; leaf < 2; ++leaf) {
                                    const int leaf_class = leaf == 0 ? (~table & 0xF) : table;
                                    const int cxm = sender == 0 ? (xm & leaf_class) : xm;
                                    const int cym = sender == 0 ? ym : (ym & leaf_class);
                                    total += cells[static_cast<std::size_t>(cxm)]
                                                  [static_cast<std::size_t>(cym)];
                                }
                            }
                            const Rational p(total, 16);
                            const TreeShape shape{static_cast<Party>(root),
                                                  static_cast<Party>(c0),
                                                  static_cast<Party>(c1),
                                                  std::popcount(static_cast<unsigned>(class0)),
                                                  std::popcount(static_cast<unsigned>(class1))};
                            auto [it, inserted] = report.table.try_emplace(shape, p);
                            if (!inserted && p > it->second) it->second = p;
                            if (p > report.best) {
                                report.best = p;
                                report.best_tree =
                                    std::string("root=") + party_letter(static_cast<Party>(root)) +
                                    "[" + table_string(static_cast<std::uint8_t>(t0)) + "]" +
                                    " branch0=" + party_letter(static_cast<Party>(c0)) + "[" +
                                    table_string(static_cast<std::uint8_t>(t1)) + "]" +
                                    " branch1=" + party_letter(static_cast<Party>(c1)) + "[" +
                                    table_string(static_cast<std::uint8_t>(t2)) + "]";
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

Rational decoder_success_bound(int class_size) {
    if (class_size < 1 || class_size > 3) {
        throw std::domain_error("class size must be 1, 2 or 3 (4 means the bit was constant)");
    }
    const auto g_table = g_lookup();
    Rational best(0);
    for (int cls = 0; cls < 16; ++cls) {
        if (std::popcount(static_cast<unsigned>(cls)) != class_size) continue;
        for (int decoder = 0; decoder < 16; ++decoder) {
            int count = 0;
            for (int x = 0; x < 4; ++x) {
                if (!(cls >> x & 1)) continue;
                for (int y = 0; y < 4; ++y) {
                    if ((decoder >> y & 1) ==
                        g_table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) {
                        ++count;
                    }
                }
            }
            best = std::max(best, Rational(count, 4 * class_size));
        }
    }
    return best;
}

DepthSuccess best_success_at_depth(int depth) {
    if (depth < 0 || depth > 3) throw std::domain_error("depth must be in 0..3");
    const CellTable& cells = cell_table();

    // best[d][xm][ym]: -1 until computed
    static constexpr int kUnset = -1;
    std::array<std::array<std::array<int, 16>, 16>, 4> best{};
    for (auto& level : best) {
        for (auto& row : level) row.fill(kUnset);
    }

    std::size_t states = 0;
    const auto go = [&](const auto& self, int xm, int ym, int d) -> int {
        int& slot = best[static_cast<std::size_t>(d)][static_cast<std::size_t>(xm)]
                        [static_cast<std::size_t>(ym)];
        if (slot != kUnset) return slot;
        ++states;
        int value = cells[static_cast<std::size_t>(xm)][static_cast<std::size_t>(ym)];
        if (d > 0) {
            for (int table = 0; table < 16; ++table) {
                const int m1 = table;
                const int m0 = ~table & 0xF;
                value = std::max(value, self(self, xm & m0, ym, d - 1) +
                                            self(self, xm & m1, ym, d - 1));
                value = std::max(value, self(self, xm, ym & m0, d - 1) +
                                            self(self, xm, ym & m1, d - 1));
            }
        }
        slot = value;
        return value;
    };

    DepthSuccess result;
    result.best = Rational(go(go, 0xF, 0xF, depth), 16);
    result.explored = states;
    return result;
}

EvalResult four_bit_protocol(const TripleInput& t) {
    if (!even_sum_promise(t)) {
        throw std::domain_error("four-bit protocol requires the even-sum promise");
    }
    const int x0 = t.x & 1, x1 = t.x >> 1;
    const int y0 = t.y & 1, y1 = t.y >> 1;
    const int z1 = t.z >> 1;
    // Under the promise z0 = x0^y0, so x0|y0|z0 collapses to x0|y0 and
    // Bob can fold the OR term into his bit.
    const int bob = y1 ^ (x0 | y0);
    const int carol = x1 ^ bob ^ z1;
    EvalResult result;
    result.transcript = {{Party::Alice, x0},
                         {Party::Alice, x1},
                         {Party::Bob, bob},
                         {Party::Carol, carol}};
    result.output = carol;
    return result;
}

EvalResult three_bit_protocol(const PairInput& p) {
    const int x0 = p.x & 1, x1 = p.x >> 1;
    // After Alice's two bits Bob knows x outright and announces the value.
    const int bob = g_value(p);
    EvalResult result;
    result.transcript = {{Party::Alice, x0}, {Party::Alice, x1}, {Party::Bob, bob}};
    result.output = bob;
    return result;
}

}  // namespace entcc
