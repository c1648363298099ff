#include "confsphere/coalgebra.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace confsphere {

namespace {

std::string issues_to_string(const std::vector<ValidationIssue>& issues) {
    std::ostringstream os;
    os << "invalid coalgebra spec:";
    for (const auto& i : issues) {
        os << "\n  ";
        if (!i.class_id.empty())
            os << i.class_id << ": ";
        os << i.message;
    }
    return os.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : std::runtime_error(issues_to_string(issues)), issues_(std::move(issues)) {}

CoalgebraSpec::CoalgebraSpec(std::string name, std::vector<std::string> components,
                             std::vector<LabelClass> classes,
                             std::vector<std::vector<CoproductTerm>> coproduct)
    : name_(std::move(name)),
      components_(std::move(components)),
      classes_(std::move(classes)),
      coproduct_(std::move(coproduct)) {
    if (coproduct_.size() != classes_.size())
        throw std::invalid_argument("coproduct table size mismatch");
    for (const auto& c : classes_)
        if (c.component < kBase || c.component >= (int)components_.size())
            throw std::invalid_argument("class " + c.id + ": component index out of range");
    for (const auto& terms : coproduct_)
        for (const auto& t : terms)
            if (t.left < kUnit || t.left >= (int)classes_.size() || t.right < kUnit ||
                t.right >= (int)classes_.size())
                throw std::invalid_argument("coproduct factor index out of range");
}

int CoalgebraSpec::find_class(const std::string& id) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].id == id)
            return (int)i;
    return -2;
}

int CoalgebraSpec::grouplike_of(int component) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].degree == 0 && classes_[i].component == component)
            return (int)i;
    return -2;
}

int CoalgebraSpec::counit_partner(int class_index) const {
    int comp = cls(class_index).component;
    return comp == kBase ? kUnit : grouplike_of(comp);
}

// ---------------------------------------------------------------------------
// Validation

namespace {

using Triple = std::array<int, 3>;

// Integer counit: 1 on the unit and on grouplikes, 0 on positive degree.
long counit_value(const CoalgebraSpec& s, int factor) {
    if (factor == kUnit)
        return 1;
    return s.cls(factor).degree == 0 ? 1 : 0;
}

void expand_left(const CoalgebraSpec& s, int factor, long coeff, int fixed_right,
                 std::map<Triple, long>& acc) {
    // (Delta (x) id) applied to the term factor (x) fixed_right.
    if (factor == kUnit) {
        acc[{kUnit, kUnit, fixed_right}] += coeff;
        return;
    }
    for (const auto& t : s.coproduct(factor))
        acc[{t.left, t.right, fixed_right}] += coeff * t.coeff;
}

void expand_right(const CoalgebraSpec& s, int factor, long coeff, int fixed_left,
                  std::map<Triple, long>& acc) {
    if (factor == kUnit) {
        acc[{fixed_left, kUnit, kUnit}] += coeff;
        return;
    }
    for (const auto& t : s.coproduct(factor))
        acc[{fixed_left, t.left, t.right}] += coeff * t.coeff;
}

std::string factor_name(const CoalgebraSpec& s, int f) {
    return f == kUnit ? "1" : s.cls(f).id;
}

}  // namespace

std::vector<ValidationIssue> validate(const CoalgebraSpec& spec) {
    std::vector<ValidationIssue> issues;
    auto flag = [&](const std::string& id, const std::string& msg) {
        issues.push_back({id, msg});
    };

    std::set<std::string> seen;
    for (const auto& c : spec.classes()) {
        if (c.id == "1")
            flag(c.id, "class id \"1\" is reserved for the unit");
        if (!seen.insert(c.id).second)
            flag(c.id, "duplicate class id");
        if (c.degree < 0)
            flag(c.id, "negative degree");
    }
    {
        std::set<std::string> comps(spec.components().begin(), spec.components().end());
        if (comps.size() != spec.components().size())
            flag("", "duplicate component names");
    }

    // Degree-0 classes are exactly the component classes, one per component.
    std::vector<int> count(spec.components().size(), 0);
    for (const auto& c : spec.classes()) {
        if (c.degree == 0) {
            if (c.component == kBase)
                flag(c.id, "degree-0 class must name a non-base component");
            else
                ++count[(std::size_t)c.component];
        }
    }
    for (std::size_t i = 0; i < count.size(); ++i)
        if (count[i] != 1)
            flag(spec.components()[i], "component must have exactly one degree-0 class, has " +
                                           std::to_string(count[i]));

    const int ncls = (int)spec.classes().size();
    for (int x = 0; x < ncls; ++x) {
        const LabelClass& c = spec.cls(x);
        const auto& terms = spec.coproduct(x);

        for (const auto& t : terms) {
            int dl = t.left == kUnit ? 0 : spec.cls(t.left).degree;
            int dr = t.right == kUnit ? 0 : spec.cls(t.right).degree;
            if (dl + dr != c.degree) {
                flag(c.id, "coproduct term (" + factor_name(spec, t.left) + "," +
                               factor_name(spec, t.right) + ") violates degree additivity");
            }
        }

        if (c.degree == 0) {
            // Grouplike: Delta(a) = a (x) a exactly.
            bool ok = terms.size() == 1 && terms[0].coeff == 1 && terms[0].left == x &&
                      terms[0].right == x;
            if (!ok)
                flag(c.id, "degree-0 class must be grouplike");
            continue;
        }

        // Counit: (eps (x) id) Delta(x) = x = (id (x) eps) Delta(x) over Z.
        std::map<int, long> right_sum, left_sum;
        for (const auto& t : terms) {
            right_sum[t.right] += t.coeff * counit_value(spec, t.left);
            left_sum[t.left] += t.coeff * counit_value(spec, t.right);
        }
        auto check_counit = [&](std::map<int, long>& m, const char* side) {
            m.erase(kUnit);  // unit coefficient irrelevant for positive-degree x
            bool ok = true;
            for (const auto& [f, v] : m) {
                if (f == x ? v != 1 : v != 0)
                    ok = false;
            }
            if (!m.count(x))
                ok = false;
            if (!ok)
                flag(spec.cls(x).id, std::string("counit fails on the ") + side + " side");
        };
        check_counit(right_sum, "left");
        check_counit(left_sum, "right");

        // Coassociativity over Z.
        std::map<Triple, long> lhs, rhs;
        for (const auto& t : terms) {
            expand_left(spec, t.left, t.coeff, t.right, lhs);
            expand_right(spec, t.right, t.coeff, t.left, rhs);
        }
        for (auto& [k, v] : rhs)
            lhs[k] -= v;
        for (const auto& [k, v] : lhs) {
            if (v != 0) {
                flag(c.id, "coassociativity fails at (" + factor_name(spec, k[0]) + "," +
                               factor_name(spec, k[1]) + "," + factor_name(spec, k[2]) +
                               ") with defect " + std::to_string(v));
                break;  // one defect per class is enough to report
            }
        }
    }
    return issues;
}

// ---------------------------------------------------------------------------
// Builtins

CoalgebraSpec builtin_sphere(int k) {
    if (k < 0)
        throw UnsupportedError("sphere dimension must be >= 0");
    if (k == 0) {
        LabelClass x{"x", 0, 0};
        return CoalgebraSpec("s0", {"x"}, {x}, {{{1, 0, 0}}});
    }
    LabelClass i{"i", k, kBase};
    return CoalgebraSpec("s" + std::to_string(k), {}, {i},
                         {{{1, 0, kUnit}, {1, kUnit, 0}}});
}

CoalgebraSpec builtin_two_points() {
    return builtin_sphere(0);
}

CoalgebraSpec builtin_cp(int m) {
    if (m < 1)
        throw UnsupportedError("cp(m) needs m >= 1");
    std::vector<LabelClass> classes;
    std::vector<std::vector<CoproductTerm>> cop;
    for (int k = 1; k <= m; ++k)
        classes.push_back({"e" + std::to_string(k), 2 * k, kBase});
    for (int k = 1; k <= m; ++k) {
        std::vector<CoproductTerm> terms;
        for (int i = 0; i <= k; ++i) {
            int j = k - i;
            terms.push_back({1, i == 0 ? kUnit : i - 1, j == 0 ? kUnit : j - 1});
        }
        cop.push_back(std::move(terms));
    }
    return CoalgebraSpec("cp" + std::to_string(m), {}, std::move(classes), std::move(cop));
}

CoalgebraSpec builtin_wedge(const std::vector<CoalgebraSpec>& parts) {
    if (parts.empty())
        throw UnsupportedError("wedge needs at least one summand");
    // Rename colliding ids by appending the 1-based summand ordinal to every
    // occurrence of that id (i, i -> i1, i2).
    std::map<std::string, int> uses;
    for (const auto& p : parts)
        for (const auto& c : p.classes())
            ++uses[c.id];
    std::map<std::string, int> comp_uses;
    for (const auto& p : parts)
        for (const auto& n : p.components())
            ++comp_uses[n];

    std::vector<std::string> components;
    std::vector<LabelClass> classes;
    std::vector<std::vector<CoproductTerm>> cop;
    std::string name = "wedge(";
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const CoalgebraSpec& p = parts[pi];
        name += (pi ? "," : "") + p.name();
        const std::string suffix = std::to_string(pi + 1);
        int comp_off = (int)components.size();
        int cls_off = (int)classes.size();
        for (const auto& n : p.components())
            components.push_back(comp_uses[n] > 1 ? n + suffix : n);
        for (const auto& c : p.classes()) {
            LabelClass nc = c;
            if (uses[c.id] > 1)
                nc.id = c.id + suffix;
            if (nc.component != kBase)
                nc.component += comp_off;
            classes.push_back(nc);
        }
        for (std::size_t ci = 0; ci < p.classes().size(); ++ci) {
            std::vector<CoproductTerm> terms;
            for (const auto& t : p.coproduct((int)ci)) {
                CoproductTerm nt = t;
                if (nt.left != kUnit)
                    nt.left += cls_off;
                if (nt.right != kUnit)
                    nt.right += cls_off;
                terms.push_back(nt);
            }
            cop.push_back(std::move(terms));
        }
    }
    name += ")";
    return CoalgebraSpec(name, std::move(components), std::move(classes), std::move(cop));
}

CoalgebraSpec builtin_suspension(const CoalgebraSpec& a) {
    for (const auto& c : a.classes())
        if (c.degree == 0)
            throw UnsupportedError(
                "suspension of a spec with degree-0 classes is unsupported (non-connected "
                "labels cannot be suspended here)");
    std::vector<LabelClass> classes;
    std::vector<std::vector<CoproductTerm>> cop;
    for (const auto& c : a.classes())
        classes.push_back({c.id, c.degree + 1, kBase});
    for (std::size_t i = 0; i < classes.size(); ++i)
        cop.push_back({{1, (int)i, kUnit}, {1, kUnit, (int)i}});
    return CoalgebraSpec("susp(" + a.name() + ")", {}, std::move(classes), std::move(cop));
}

// ---------------------------------------------------------------------------
// Label grammar and file loading

CoalgebraSpec parse_label(const std::string& text) {
    if (text == "two_points")
        return builtin_two_points();
    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return isdigit(c); });
    };
    if (text.size() > 1 && text[0] == 's' && all_digits(text.substr(1)))
        return builtin_sphere(std::stoi(text.substr(1)));
    if (text.size() > 2 && text.rfind("cp", 0) == 0 && all_digits(text.substr(2)))
        return builtin_cp(std::stoi(text.substr(2)));
    if (text.rfind("wedge:", 0) == 0) {
        std::vector<CoalgebraSpec> parts;
        std::string rest = text.substr(6);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t comma = rest.find(',', pos);
            std::string tok =
                comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos);
            if (tok.empty())
                throw ParseError("empty summand in wedge label");
            parts.push_back(parse_label(tok));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return builtin_wedge(parts);
    }
    if (text.rfind("susp:", 0) == 0)
        return builtin_suspension(parse_label(text.substr(5)));
    return load_spec(text);
}

namespace {

using nlohmann::json;

CoalgebraSpec spec_from_json(const json& j) {
    std::vector<ValidationIssue> issues;
    auto fail = [&](const std::string& msg) { issues.push_back({"", msg}); };

    if (!j.is_object())
        throw ParseError("top level must be a JSON object");
    static const std::set<std::string> top_keys = {"name", "components", "classes", "coproduct"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!top_keys.count(it.key()))
            fail("unknown field \"" + it.key() + "\"");
    for (const auto& k : top_keys)
        if (!j.contains(k))
            fail("missing field \"" + k + "\"");
    if (!issues.empty())
        throw ValidationError(issues);

    std::string name = j.at("name").get<std::string>();
    std::vector<std::string> components;
    for (const auto& c : j.at("components"))
        components.push_back(c.get<std::string>());

    std::vector<LabelClass> classes;
    std::map<std::string, int> class_index;
    static const std::set<std::string> class_keys = {"id", "degree", "component"};
    for (const auto& c : j.at("classes")) {
        if (!c.is_object())
            throw ParseError("class entries must be objects");
        for (auto it = c.begin(); it != c.end(); ++it)
            if (!class_keys.count(it.key()))
                fail("unknown class field \"" + it.key() + "\"");
        LabelClass lc;
        lc.id = c.at("id").get<std::string>();
        lc.degree = c.at("degree").get<int>();
        const auto& comp = c.at("component");
        if (comp.is_null()) {
            lc.component = kBase;
        } else {
            std::string cn = comp.get<std::string>();
            auto it = std::find(components.begin(), components.end(), cn);
            if (it == components.end()) {
                issues.push_back({lc.id, "unknown component \"" + cn + "\""});
                lc.component = kBase;
            } else {
                lc.component = (int)(it - components.begin());
            }
        }
        class_index[lc.id] = (int)classes.size();
        classes.push_back(lc);
    }

    auto resolve = [&](const std::string& s, const std::string& owner) -> int {
        if (s == "1")
            return kUnit;
        auto it = class_index.find(s);
        if (it == class_index.end()) {
            issues.push_back({owner, "coproduct names unknown class \"" + s + "\""});
            return kUnit;
        }
        return it->second;
    };

    std::vector<std::vector<CoproductTerm>> cop(classes.size());
    for (auto it = j.at("coproduct").begin(); it != j.at("coproduct").end(); ++it) {
        auto ci = class_index.find(it.key());
        if (ci == class_index.end()) {
            issues.push_back({it.key(), "coproduct for unknown class"});
            continue;
        }
        for (const auto& term : it.value()) {
            if (!term.is_array() || term.size() != 3)
                throw ParseError("coproduct terms must be [int, left, right] triples");
            CoproductTerm t;
            t.coeff = term[0].get<long>();
            t.left = resolve(term[1].get<std::string>(), it.key());
            t.right = resolve(term[2].get<std::string>(), it.key());
            cop[(std::size_t)ci->second].push_back(t);
        }
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (cop[i].empty())
            issues.push_back({classes[i].id, "no coproduct given"});

    if (!issues.empty())
        throw ValidationError(issues);
    return CoalgebraSpec(std::move(name), std::move(components), std::move(classes),
                         std::move(cop));
}

}  // namespace

CoalgebraSpec load_spec_from_string(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return spec_from_json(j);
}

CoalgebraSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open label spec file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_spec_from_string(ss.str());
}

}  // namespace confsphere
