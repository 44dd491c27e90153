#pragma once

#include "qweyl/divided_power.hpp"
#include "qweyl/formal_uq.hpp"
#include "qweyl/weyl.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qweyl {

/// Syntax tree of the expression language
///
///   expr   := '-'? term (('+' | '-') term)*
///   term   := factor (('*')? factor)*
///   factor := atom | '(' expr ')' | '[' expr ',' expr ']' qtag?
///   qtag   := '_q' | '_{q^-1}'
///   atom   := [xdsefK] digits ('^-1')? | 't(' ints ')' | 'E(' int ',' int ')'
///           | 'q' ('^' int)? | digits | 'x^(' ints ')'
///
/// Juxtaposition is composition for operators and multiplication in A_q(n)
/// for elements. A leading '-' negates the first term only.
struct Ast {
    enum class Kind {
        Sum,       // children with signs
        Product,   // children in order
        Bracket,   // [a, b]_c
        Number,    // integer literal
        QPower,    // q^k
        Gen,       // x d s e f K with index (and inverse flag)
        Theta,     // t(ints)
        Root,      // E(i,j)
        Monomial,  // x^(ints)
    };

    Kind kind = Kind::Number;
    std::size_t offset = 0;
    std::vector<std::unique_ptr<Ast>> children;
    std::vector<bool> negated; // Sum only, one flag per child
    char letter = 0;
    bool inverse = false;
    int bracket_exp = 0;    // Bracket: [a,b]_c with c = q^bracket_exp
    std::string digits;     // Number
    std::vector<int> ints;  // Gen index, QPower exponent, Theta, Root, Monomial
};

/// Throws SyntaxError with the byte offset of the offending token.
std::unique_ptr<Ast> parse_ast(std::string_view src);

/// Operator on A_q(n). e<i>, f<i>, K<i> expand to the realization
/// generators and E(i,j) to root_op(i,j). Monomials raise ContextMix.
Operator parse_operator(std::string_view src, int n);

/// Element of A_q(n). Operator atoms raise ContextMix; a monomial of the
/// wrong length raises RankMismatch.
Element parse_element(std::string_view src, int n);

/// "1,2,1" (commas and/or whitespace). Indices must lie in 1..n.
BraidWord parse_braid_word(std::string_view src, int n);

} // namespace qweyl
