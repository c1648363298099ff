#include "confsphere/output.hpp"

#include <json.hpp>

#include <algorithm>
#include <climits>
#include <iomanip>
#include <sstream>

namespace confsphere {

std::optional<OutputFormat> parse_format(const std::string& s) {
    if (s == "table")
        return OutputFormat::table;
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    return std::nullopt;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<const HomologyRow*> sorted_rows(const HomologyTable& t) {
    std::vector<const HomologyRow*> rows;
    for (const auto& r : t.rows)
        rows.push_back(&r);
    std::sort(rows.begin(), rows.end(), [](const HomologyRow* a, const HomologyRow* b) {
        if (a->degree != b->degree)
            return a->degree < b->degree;
        if (a->comp != b->comp)
            return a->comp < b->comp;
        return a->base_weight.value_or(INT_MIN) < b->base_weight.value_or(INT_MIN);
    });
    return rows;
}

std::string joined_basis(const HomologyRow& r) {
    std::string s;
    for (std::size_t i = 0; i < r.basis.size(); ++i)
        s += (i ? ";" : "") + r.basis[i];
    return s;
}

}  // namespace

std::string render_table(const HomologyTable& t, OutputFormat f) {
    auto rows = sorted_rows(t);
    std::ostringstream os;
    if (f == OutputFormat::csv) {
        os << "kind,char,degree,component,dim,basis\n";
        for (const auto* r : rows)
            os << kind_name(t.kind) << "," << t.characteristic << "," << r->degree << ","
               << csv_quote(render_component(t, *r)) << "," << r->dim << ","
               << csv_quote(joined_basis(*r)) << "\n";
        return os.str();
    }
    if (f == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto* r : rows) {
            nlohmann::json o;
            o["kind"] = kind_name(t.kind);
            o["char"] = t.characteristic;
            o["degree"] = r->degree;
            o["component"] = render_component(t, *r);
            o["dim"] = r->dim;
            o["basis"] = joined_basis(*r);
            arr.push_back(o);
        }
        return arr.dump(2) + "\n";
    }
    os << "# " << t.spec_name << "  n=" << t.n << "  char=" << t.characteristic << "  kind="
       << kind_name(t.kind) << "\n";
    os << "# bounds: degree<=" << t.max_degree;
    if (t.max_weight > 0)
        os << ", particles<=" << t.max_weight;
    os << "\n";
    os << std::setw(6) << "degree" << "  " << std::setw(10) << "component" << "  " << std::setw(4)
       << "dim" << "  basis\n";
    for (const auto* r : rows)
        os << std::setw(6) << r->degree << "  " << std::setw(10) << render_component(t, *r)
           << "  " << std::setw(4) << r->dim << "  " << joined_basis(*r) << "\n";
    return os.str();
}

std::string render_diff(const DiffReport& d, const HomologyTable& a, const HomologyTable& b,
                        OutputFormat f) {
    std::ostringstream os;
    auto comp_str = [&](const std::vector<int>& c) {
        if (c.empty())
            return std::string("-");
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i)
            s += (i ? "," : "") + std::to_string(c[i]);
        return s + ")";
    };
    if (f == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : d.entries) {
            nlohmann::json o;
            o["degree"] = e.degree;
            o["component"] = comp_str(e.comp);
            o[kind_name(a.kind)] = e.dim_a;
            o[kind_name(b.kind)] = e.dim_b;
            arr.push_back(o);
        }
        return arr.dump(2) + "\n";
    }
    if (f == OutputFormat::csv) {
        os << "degree,component," << kind_name(a.kind) << "," << kind_name(b.kind) << "\n";
        for (const auto& e : d.entries)
            os << e.degree << "," << csv_quote(comp_str(e.comp)) << "," << e.dim_a << ","
               << e.dim_b << "\n";
        return os.str();
    }
    if (d.identical()) {
        os << "identical\n";
        return os.str();
    }
    os << "tables differ (" << kind_name(a.kind) << " vs " << kind_name(b.kind) << "):\n";
    for (const auto& e : d.entries)
        os << "  degree " << e.degree << "  component " << comp_str(e.comp) << "  " << e.dim_a
           << " vs " << e.dim_b << "\n";
    return os.str();
}

}  // namespace confsphere
