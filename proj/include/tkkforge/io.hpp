#pragma once

#include <array>
#include <map>

#include "tkkforge/lie.hpp"

namespace tkkforge {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

// Structure-constant file. UTF-8 text, one record per line, "#" comments,
// scalars as integers or "n/d" fractions (mapped through the modular
// inverse over GF(p)); indices 0-based.
struct AlgebraFile {
    enum class Kind { jordan_algebra, jordan_triple, jordan_pair, lie_graded };

    Kind kind{};
    Field field{};
    std::vector<std::string> basis_a;  // algebra/triple basis; pair minus basis
    std::vector<std::string> basis_b;  // pair plus basis
    std::vector<std::string> lie_labels;
    std::vector<int> lie_degrees;
    std::map<std::array<Index, 3>, Scalar> bil;       // algebra product / lie bracket
    std::map<std::array<Index, 4>, Scalar> tri;       // triple product / pair t-
    std::map<std::array<Index, 4>, Scalar> tri_plus;  // pair t+
    std::optional<Vec> unit;                          // algebra
    std::optional<Matrix> involution;                 // lie decoration
    std::optional<std::array<Vec, 3>> sl2;            // lie decoration: h, e, f

    friend bool operator==(const AlgebraFile& a, const AlgebraFile& b) = default;
};

const char* kind_str(AlgebraFile::Kind k);

AlgebraFile parse_algebra_file(const std::string& text);
std::string emit_algebra_file(const AlgebraFile& f);

Scalar parse_scalar(const Field& f, const std::string& text);  // throws std::invalid_argument

JordanAlgebra to_algebra(const AlgebraFile& f);
JordanTriple to_triple(const AlgebraFile& f);
JordanPair to_pair(const AlgebraFile& f);
GradedLieAlgebra to_lie(const AlgebraFile& f);

AlgebraFile file_of_algebra(const JordanAlgebra& j);
AlgebraFile file_of_triple(const JordanTriple& t);
AlgebraFile file_of_pair(const JordanPair& p);
AlgebraFile file_of_lie(const GradedLieAlgebra& l,
                        const std::optional<Matrix>& involution = std::nullopt,
                        const std::optional<std::array<Vec, 3>>& sl2 = std::nullopt);

std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const AlgebraFile& f);

}  // namespace tkkforge
