#include "ballq/registry.hpp"

#include <boost/tokenizer.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace ballq::fpp {

namespace detail {
extern const char* const kEmbeddedRegistryCsv;
}

namespace {

constexpr std::array<const char*, 6> kHeader = {"raw_name", "family", "prime_or_place",
                                                "torsion_set", "subgroup_tag", "case"};

std::vector<std::string> split_csv_line(const std::string& line) {
    using Sep = boost::escaped_list_separator<char>;
    boost::tokenizer<Sep> tok(line, Sep('\\', ',', '"'));
    return {tok.begin(), tok.end()};
}

std::string quote_if_needed(const std::string& field) {
    if (field.find_first_of(",\"\\") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string to_string(Case c) {
    switch (c) {
        case Case::B: return "B";
        case Case::C: return "C";
        case Case::D: return "D";
        case Case::MinType: return "MinType";
    }
    return "?";
}

Case parse_case(std::string_view text) {
    if (text == "B" || text == "b") return Case::B;
    if (text == "C" || text == "c") return Case::C;
    if (text == "D" || text == "d") return Case::D;
    if (text == "MinType" || text == "min") return Case::MinType;
    throw std::invalid_argument("unknown case tag '" + std::string(text) + "'");
}

RegistryError::RegistryError(std::size_t row, const std::string& what)
    : std::runtime_error("registry row " + std::to_string(row) + ": " + what), row_(row) {}

std::vector<FppRecord> parse_registry(std::string_view csv) {
    std::istringstream in{std::string(csv)};
    std::string line;
    if (!std::getline(in, line)) throw RegistryError(0, "missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_csv_line(line);
    if (!std::equal(header.begin(), header.end(), kHeader.begin(), kHeader.end())) {
        throw RegistryError(0, "unexpected header '" + line + "'");
    }

    std::vector<FppRecord> out;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f;
        try {
            f = split_csv_line(line);
        } catch (const boost::escaped_list_error& e) {
            throw RegistryError(row, std::string("malformed CSV: ") + e.what());
        }
        if (f.size() != kHeader.size()) {
            throw RegistryError(row, "expected " + std::to_string(kHeader.size()) + " fields, got " +
                                         std::to_string(f.size()));
        }
        if (f[0].empty()) throw RegistryError(row, "empty raw_name");
        FppRecord r{f[0], f[1], f[2], f[3], f[4], Case::B};
        try {
            r.kind = parse_case(f[5]);
        } catch (const std::invalid_argument& e) {
            throw RegistryError(row, e.what());
        }
        const bool duplicate = std::any_of(out.begin(), out.end(),
                                           [&](const FppRecord& o) { return o.raw_name == r.raw_name; });
        if (duplicate) throw RegistryError(row, "duplicate raw_name '" + r.raw_name + "'");
        out.push_back(std::move(r));
    }
    return out;
}

std::string serialize_registry(const std::vector<FppRecord>& records) {
    std::ostringstream os;
    for (std::size_t i = 0; i < kHeader.size(); ++i) os << (i ? "," : "") << kHeader[i];
    os << "\n";
    for (const auto& r : records) {
        os << quote_if_needed(r.raw_name) << "," << quote_if_needed(r.family) << ","
           << quote_if_needed(r.prime_or_place) << "," << quote_if_needed(r.torsion_set) << ","
           << quote_if_needed(r.subgroup_tag) << "," << to_string(r.kind) << "\n";
    }
    return os.str();
}

const std::vector<FppRecord>& load_registry() {
    static const std::vector<FppRecord> records = [] {
        auto r = parse_registry(detail::kEmbeddedRegistryCsv);
        if (r.size() != 50) throw RegistryError(r.size(), "embedded registry must hold 50 lattices");
        return r;
    }();
    return records;
}

std::vector<FppRecord> query_by_case(const std::vector<FppRecord>& records, Case kind) {
    std::vector<FppRecord> out;
    std::copy_if(records.begin(), records.end(), std::back_inserter(out),
                 [kind](const FppRecord& r) { return r.kind == kind; });
    return out;
}

const FppRecord& find_record(const std::vector<FppRecord>& records, std::string_view raw_name) {
    const auto it = std::find_if(records.begin(), records.end(),
                                 [&](const FppRecord& r) { return r.raw_name == raw_name; });
    if (it == records.end()) throw std::out_of_range("no record named '" + std::string(raw_name) + "'");
    return *it;
}

CoveringLookup covering_context(const FppRecord& record) {
    switch (record.kind) {
        case Case::D:
            if (record.raw_name == "(a=7,p=2,∅,7_21)") {
                return {ContextKind::Known, CoveringContext{"(a=7,p=2,∅)", "(a=7,p=2,∅,D_3,2_3)", 21}};
            }
            return {ContextKind::UnspecifiedInSource, std::nullopt};
        case Case::C:
            return {ContextKind::UnspecifiedInSource, std::nullopt};
        case Case::B:
        case Case::MinType:
            break;
    }
    return {ContextKind::None, std::nullopt};
}

std::string registry_to_json(const std::vector<FppRecord>& records, int indent) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        arr.push_back({{"raw_name", r.raw_name},
                       {"family", r.family},
                       {"prime_or_place", r.prime_or_place},
                       {"torsion_set", r.torsion_set},
                       {"subgroup_tag", r.subgroup_tag},
                       {"case", to_string(r.kind)}});
    }
    return arr.dump(indent);
}

}  // namespace ballq::fpp
