#include "bdim/bp.hpp"

namespace bdim {

int BranchingProgram::add(ProgramNode n) {
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
}

namespace {

struct Evaluator {
    const std::vector<ProgramNode>& nodes;
    const OrderBits& bits;
    std::vector<int8_t> memo;

    bool bit(int i) const { return bits[i] != 0; }

    bool detection(const int* b, Side side) const {
        return color_detect_eval({bit(b[0]), bit(b[1]), bit(b[2]), bit(b[3]), bit(b[4])}, side);
    }

    bool eval(int id) {
        if (id < 0) return false;
        if (memo[id] != -1) return memo[id] != 0;
        const ProgramNode& n = nodes[id];
        bool r = false;
        switch (n.kind) {
            case ProgramNode::Kind::Const: r = n.value != 0; break;
            case ProgramNode::Kind::Bit: r = bit(n.bits[0]); break;
            case ProgramNode::Kind::Not: r = !eval(n.children[0]); break;
            case ProgramNode::Kind::And: {
                r = true;
                for (int c : n.children)
                    if (!eval(c)) {
                        r = false;
                        break;
                    }
                break;
            }
            case ProgramNode::Kind::Or: {
                r = false;
                for (int c : n.children)
                    if (eval(c)) {
                        r = true;
                        break;
                    }
                break;
            }
            case ProgramNode::Kind::Xor: r = eval(n.children[0]) != eval(n.children[1]); break;
            case ProgramNode::Kind::Eq: r = !bit(n.bits[0]) && !bit(n.bits[1]); break;
            case ProgramNode::Kind::SetMember: {
                auto [xin, yin] = set_membership_decode(bit(n.bits[0]), bit(n.bits[1]), bit(n.bits[2]));
                r = n.value == 0 ? xin : yin;
                break;
            }
            case ProgramNode::Kind::RelSwitch: {
                int c;
                switch (rel_pos(bit(n.bits[0]), bit(n.bits[1]))) {
                    case RelPos::XBelowY: c = n.children[0]; break;
                    case RelPos::YBelowX: c = n.children[1]; break;
                    case RelPos::XLeftOfY: c = n.children[2]; break;
                    default: c = n.children[3]; break;
                }
                r = eval(c);
                break;
            }
            case ProgramNode::Kind::ColorDet: r = detection(n.bits.data(), static_cast<Side>(n.value)); break;
            case ProgramNode::Kind::BgRoot: {
                Side side = static_cast<Side>(n.value);
                r = detection(n.bits.data(), side) && eval(n.children[0]);
                break;
            }
            case ProgramNode::Kind::BgStep: {
                Side side = static_cast<Side>(n.value);
                if (!detection(n.bits.data(), side)) {
                    r = false; // the walk does not continue with the next signature color
                    break;
                }
                if (!detection(n.bits.data() + 5, side)) {
                    r = eval(n.children[0]); // fresh-family route
                    break;
                }
                int off = 10;
                if (n.children[1] != -1) {
                    if (detection(n.bits.data() + off, side)) {
                        r = eval(n.children[1]);
                        break;
                    }
                    off += 5;
                }
                if (n.children[2] != -1) {
                    if (detection(n.bits.data() + off, side)) {
                        r = eval(n.children[2]);
                        break;
                    }
                }
                r = false;
                break;
            }
            case ProgramNode::Kind::BgLeaf: r = !detection(n.bits.data(), static_cast<Side>(n.value)); break;
        }
        memo[id] = r ? 1 : 0;
        return r;
    }
};

} // namespace

bool BranchingProgram::eval(const OrderBits& bits) const { return eval_node(root, bits); }

bool BranchingProgram::eval_node(int id, const OrderBits& bits) const {
    Evaluator e{nodes, bits, std::vector<int8_t>(nodes.size(), -1)};
    return e.eval(id);
}

} // namespace bdim
