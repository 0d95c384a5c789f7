#include "bhg/setfile.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace bhg {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int64_t to_int(const std::string& s) {
    size_t pos = 0;
    int64_t v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad integer: " + s);
    }
    if (pos != s.size()) throw ParseError("bad integer: " + s);
    return v;
}

GroupElement vectorize_row(const FieldSpec& spec, const std::vector<FieldElement>& row) {
    GroupElement e;
    for (const auto& coord : row) {
        auto vec = vectorize(spec, coord);
        e.insert(e.end(), vec.begin(), vec.end());
    }
    return e;
}

}  // namespace

SetFile setfile_from_field_rows(const FieldSpec& spec, int h,
                                std::vector<std::vector<FieldElement>> rows,
                                std::optional<int64_t> g, std::string construction) {
    std::sort(rows.begin(), rows.end(),
              [&](const auto& a, const auto& b) {
                  return vectorize_row(spec, a) < vectorize_row(spec, b);
              });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    std::vector<GroupElement> elements;
    elements.reserve(rows.size());
    for (const auto& row : rows) elements.push_back(vectorize_row(spec, row));

    SetFile file;
    file.field = spec;
    file.field_rows = std::move(rows);
    file.construction = std::move(construction);
    file.set = make_set(
        GroupSpec::product(std::vector<int64_t>(static_cast<size_t>(h) * spec.n, spec.p)),
        std::move(elements), h, g);
    return file;
}

std::string render(const SetFile& file) {
    std::ostringstream out;
    out << "format=1\n";
    if (file.field) {
        const FieldSpec& fs = *file.field;
        out << "group=field:" << fs.p << "," << fs.n << "," << file.set.h << "\n";
        out << "modulus=";
        for (size_t i = 0; i < fs.modulus.size(); ++i)
            out << (i ? "," : "") << fs.modulus[i];
        out << "\n";
    } else {
        out << "group=" << file.set.spec.to_string() << "\n";
    }
    out << "h=" << file.set.h << "\n";
    if (file.set.g) out << "g=" << *file.set.g << "\n";
    if (!file.construction.empty()) out << "construction=" << file.construction << "\n";
    out << "convention=" << file.convention << "\n";
    if (file.field) {
        for (const auto& row : file.field_rows) {
            for (size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << fe_to_string(*file.field, row[i]);
            out << "\n";
        }
    } else {
        for (const auto& e : file.set.elements) {
            for (size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
            out << "\n";
        }
    }
    return out.str();
}

SetFile parse(const std::string& text) {
    std::istringstream in(text);
    return parse_stream(in);
}

SetFile parse_stream(std::istream& in) {
    SetFile file;
    std::optional<GroupSpec> group;
    std::optional<FieldSpec> field;
    std::vector<int64_t> field_desc;  // p, n, h
    std::vector<int64_t> modulus;
    bool have_modulus = false;
    int h = 2;
    std::optional<int64_t> g;
    std::vector<std::string> element_lines;

    std::string line;
    bool saw_format = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        bool is_header = eq != std::string::npos &&
                         line.substr(0, eq).find(',') == std::string::npos &&
                         !std::isdigit(static_cast<unsigned char>(line[0]));
        if (!is_header) {
            element_lines.push_back(line);
            continue;
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (key == "format") {
            if (to_int(value) != 1) throw ParseError("unsupported format version: " + value);
            saw_format = true;
        } else if (key == "group") {
            if (value.rfind("field:", 0) == 0) {
                for (const auto& part : split(value.substr(6), ','))
                    field_desc.push_back(to_int(part));
                if (field_desc.size() != 3) throw ParseError("field descriptor needs p,n,h");
            } else {
                group = GroupSpec::parse(value);
            }
        } else if (key == "modulus") {
            for (const auto& part : split(value, ',')) modulus.push_back(to_int(part));
            have_modulus = true;
        } else if (key == "h") {
            h = static_cast<int>(to_int(value));
        } else if (key == "g") {
            g = to_int(value);
        } else if (key == "construction") {
            file.construction = value;
        } else if (key == "convention") {
            file.convention = value;
        } else {
            throw ParseError("unknown header record: " + key);
        }
    }
    if (!saw_format) throw ParseError("missing format record");

    if (!field_desc.empty()) {
        try {
            field = FieldSpec::make(field_desc[0], static_cast<int>(field_desc[1]),
                                    have_modulus ? std::optional(modulus) : std::nullopt);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        int row_h = static_cast<int>(field_desc[2]);
        std::vector<std::vector<FieldElement>> rows;
        for (const auto& el : element_lines) {
            auto parts = split(el, ',');
            if (static_cast<int>(parts.size()) != row_h)
                throw ParseError("element line has wrong arity: " + el);
            std::vector<FieldElement> row;
            for (const auto& part : parts) {
                try {
                    row.push_back(fe_parse(*field, part));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what());
                }
            }
            rows.push_back(std::move(row));
        }
        SetFile out = setfile_from_field_rows(*field, row_h, std::move(rows), g,
                                              file.construction);
        out.set.h = h;
        out.convention = file.convention;
        return out;
    }

    if (!group) throw ParseError("missing group record");
    std::vector<GroupElement> elements;
    for (const auto& el : element_lines) {
        GroupElement e;
        for (const auto& part : split(el, ',')) e.push_back(to_int(part));
        if (static_cast<int>(e.size()) != group->dimension())
            throw ParseError("element line has wrong arity: " + el);
        elements.push_back(std::move(e));
    }
    try {
        file.set = make_set(*group, std::move(elements), h, g);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return file;
}

}  // namespace bhg
