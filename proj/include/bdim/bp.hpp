#ifndef BDIM_BP_HPP
#define BDIM_BP_HPP

#include <cstdint>
#include <vector>

#include "bdim/errors.hpp"
#include "bdim/tools.hpp"

namespace bdim {

// bits[i] == (x strictly before y in permutation i); all false when x == y.
using OrderBits = std::vector<uint8_t>;

// Nodes read order bits and child evaluations only; element identities never
// reach the program.
struct ProgramNode {
    enum class Kind : uint8_t {
        Const,     // value
        Bit,       // bits[0]
        Not,       // children[0]
        And,       // all children
        Or,        // any child
        Xor,       // children[0] ^ children[1]
        Eq,        // bits [fwd, rev]: true iff x == y
        SetMember, // bits [b1,b2,b3], value 0: x in C, 1: y in C
        RelSwitch, // bits [L,R]; children [x_below_y, y_below_x, x_left, y_left], -1 = 0
        ColorDet,  // bits [L,R,b1,b2,bm], value = side
        BgRoot,    // bits: 5-bit detection; children [next]; value = side
        BgStep,    // bits: detA(5)+detB(5)[+detC(5)][+detD(5)]; children [ch0,ch1,ch2]; value = side
        BgLeaf,    // bits: 5-bit detection; value = side
    };
    Kind kind = Kind::Const;
    int value = 0;
    std::vector<int> bits;
    std::vector<int> children;
};

struct BranchingProgram {
    std::vector<ProgramNode> nodes;
    int root = -1;

    int add(ProgramNode n);
    bool eval(const OrderBits& bits) const;
    bool eval_node(int id, const OrderBits& bits) const;
};

} // namespace bdim

#endif
