#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhg/field.hpp"
#include "bhg/group.hpp"

namespace bhg {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line-oriented set file: '#' comments, then header records
// (format=1; group=...; h=...; optional g=...; optional construction=...;
// convention=multiset-repetition), then one element per line as
// comma-separated coordinates, sorted lexicographically.
//
// Sets over GF(p^n)^h (the moment curve before vectorization) use
// group=field:p,n,h plus a modulus= record; element lines are then field
// coordinates like "t+2,2". `set` always holds the vectorized product form,
// which is the isomorphic group the verifier works on.
struct SetFile {
    BhgSet set;
    std::optional<FieldSpec> field;
    std::vector<std::vector<FieldElement>> field_rows;
    std::string construction;
    std::string convention = "multiset-repetition";
};

SetFile setfile_from_field_rows(const FieldSpec& spec, int h,
                                std::vector<std::vector<FieldElement>> rows,
                                std::optional<int64_t> g, std::string construction);

std::string render(const SetFile& file);
SetFile parse(const std::string& text);
SetFile parse_stream(std::istream& in);

}  // namespace bhg
