#pragma once

/**
 * @file registry.hpp
 * @brief The 50 fake-projective-plane lattices with their case tags.
 *
 * Names are stored verbatim in an ASCII/UTF-8 transliteration of the
 * typeset table:
 *
 *   \emptyset        -> ∅
 *   \{ ... \}        -> { ... }
 *   X_{21}           -> X_21
 *   {\mathcal C}_{n} -> C_n   (family column: Cn)
 *   X'               -> Xp
 *   whitespace       -> removed
 *
 * Typographic slips of the source table (an extra closing parenthesis in
 * one row, a missing opening parenthesis in another) are preserved.
 */

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ballq::fpp {

enum class Case { B, C, D, MinType };

std::string to_string(Case c);
/// Accepts "B"/"C"/"D"/"MinType" and the CLI spellings b/c/d/min.
Case parse_case(std::string_view text);

struct FppRecord {
    std::string raw_name;
    std::string family;          // a=1, a=2, a=7, a=15, a=23, C2, C10, C18, C20
    std::string prime_or_place;  // p=5, {v_2}, ...
    std::string torsion_set;
    std::string subgroup_tag;    // empty for maximal lattices
    Case kind = Case::B;

    friend bool operator==(const FppRecord&, const FppRecord&) = default;
};

class RegistryError : public std::runtime_error {
public:
    RegistryError(std::size_t row, const std::string& what);
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

/// The embedded table, in table order.
const std::vector<FppRecord>& load_registry();

/// Parses CSV text with header raw_name,family,prime_or_place,torsion_set,
/// subgroup_tag,case. Throws RegistryError naming the 1-based data row.
std::vector<FppRecord> parse_registry(std::string_view csv);

/// Serializes back to the same CSV dialect (minimal quoting, '\n' line ends).
std::string serialize_registry(const std::vector<FppRecord>& records);

std::vector<FppRecord> query_by_case(const std::vector<FppRecord>& records, Case kind);

const FppRecord& find_record(const std::vector<FppRecord>& records, std::string_view raw_name);

struct CoveringContext {
    std::string quotient;         // X
    std::string regular_cover;    // M'
    long degree = 0;
};

enum class ContextKind { None, UnspecifiedInSource, Known };

struct CoveringLookup {
    ContextKind kind = ContextKind::None;
    std::optional<CoveringContext> context;
};

/// Case (d) has a named quotient and regular companion; case (c) companions
/// exist but are not tabulated; case (b) and minimal-type records have none.
CoveringLookup covering_context(const FppRecord& record);

/// Orders an automorphism group of a fake projective plane can have.
inline constexpr long kAutomorphismOrders[] = {1, 3, 9, 21};

std::string registry_to_json(const std::vector<FppRecord>& records, int indent = 2);

}  // namespace ballq::fpp
