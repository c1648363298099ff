#include "confsphere/assemble.hpp"
#include "confsphere/coalgebra.hpp"
#include "confsphere/output.hpp"
#include "confsphere/paper_check.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace confsphere;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitUnsupported = 3;

int default_jobs() {
    if (const char* env = std::getenv("CONFSPHERE_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1)
            return j;
    }
    return 1;
}

CoalgebraSpec load_and_validate(const std::string& label) {
    CoalgebraSpec spec = parse_label(label);
    std::vector<ValidationIssue> issues = validate(spec);
    if (!issues.empty())
        throw ValidationError(std::move(issues));
    return spec;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
        if (!tok.empty())
            out.push_back(std::stoi(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

struct CommonFlags {
    std::string label;
    int n = 2;
    unsigned long characteristic = 0;
    int max_degree = 8;
    int max_weight = 8;
    int comp_range = 4;
    std::string component;
    std::string format = "table";
    int jobs = default_jobs();

    void attach(CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--label", label, "label space: s<k>, cp<m>, wedge:a,b,..., susp:<spec>, or a JSON file path")
            ->required();
        cmd->add_option("-n,--n", n, "dimension n of the sphere/discs")->check(CLI::Range(1, 16));
        cmd->add_option("--char", characteristic, "field characteristic (0 or a prime)");
        cmd->add_option("--max-degree", max_degree, "top homological degree")
            ->check(CLI::Range(0, 64));
        cmd->add_option("--max-weight", max_weight,
                        "particle-count cap for configuration-space kinds");
        cmd->add_option("--comp-range", comp_range,
                        "scan components in [-R,R] per reduced component");
        cmd->add_option("--component", component, "exact component filter, e.g. \"1,0\"");
        if (with_format)
            cmd->add_option("--format", format, "table|csv|json");
        cmd->add_option("--jobs", jobs, "parallel block evaluation width (env CONFSPHERE_JOBS)");
    }

    HomologyOptions options() const {
        HomologyOptions o;
        o.max_degree = max_degree;
        o.max_weight = max_weight;
        o.comp_range = comp_range;
        if (!component.empty())
            o.component = parse_int_list(component);
        o.jobs = jobs;
        return o;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homology of labelled configuration spaces on spheres and free mapping spaces"};
    app.require_subcommand(1);

    CommonFlags hom_flags;
    std::string kind_str = "sphere";
    int snaith_weight = 1;
    CLI::App* hom = app.add_subcommand("homology", "Betti table with basis names");
    hom_flags.attach(hom);
    hom->add_option("--kind", kind_str, "rn|omega|sphere|sections|maps|snaith");
    hom->add_option("--weight", snaith_weight, "particle count for --kind snaith");

    CommonFlags cmp_flags;
    std::string kinds_str = "sections,maps";
    std::string offset_str;
    CLI::App* cmp = app.add_subcommand("compare", "diff two kinds per (degree, component)");
    cmp_flags.attach(cmp);
    cmp->add_option("--kinds", kinds_str, "two kinds, comma separated");
    cmp->add_option("--offset", offset_str,
                    "integer offsets added to the second kind's components");

    CLI::App* pc = app.add_subcommand("paper-check", "reproduce the published values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (hom->parsed()) {
            auto kind = parse_kind(kind_str);
            if (!kind)
                throw UnsupportedError("unknown kind: " + kind_str);
            auto format = parse_format(hom_flags.format);
            if (!format)
                throw UnsupportedError("unknown format: " + hom_flags.format);
            CoalgebraSpec spec = load_and_validate(hom_flags.label);
            HomologyOptions opt = hom_flags.options();
            opt.snaith_weight = snaith_weight;
            FieldSpec field(hom_flags.characteristic);
            HomologyTable t = homology(spec, hom_flags.n, field, *kind, opt);
            std::cout << render_table(t, *format);
            return 0;
        }
        if (cmp->parsed()) {
            auto format = parse_format(cmp_flags.format);
            if (!format)
                throw UnsupportedError("unknown format: " + cmp_flags.format);
            std::size_t comma = kinds_str.find(',');
            if (comma == std::string::npos)
                throw UnsupportedError("--kinds needs two comma-separated kinds");
            auto ka = parse_kind(kinds_str.substr(0, comma));
            auto kb = parse_kind(kinds_str.substr(comma + 1));
            if (!ka || !kb)
                throw UnsupportedError("unknown kind in --kinds " + kinds_str);
            CoalgebraSpec spec = load_and_validate(cmp_flags.label);
            FieldSpec field(cmp_flags.characteristic);
            HomologyOptions opt = cmp_flags.options();
            std::vector<int> offset =
                offset_str.empty() ? std::vector<int>{} : parse_int_list(offset_str);
            HomologyTable ta = homology(spec, cmp_flags.n, field, *ka, opt);
            HomologyTable tb = homology(spec, cmp_flags.n, field, *kb, opt);
            DiffReport d = compare_tables(ta, tb, offset);
            std::cout << render_diff(d, ta, tb, *format);
            return d.identical() ? 0 : 1;
        }
        if (pc->parsed()) {
            auto items = run_paper_checks();
            bool all = true;
            for (const auto& it : items) {
                std::cout << (it.pass ? "[PASS] " : "[FAIL] ") << it.name;
                if (!it.pass)
                    std::cout << "  expected " << it.expected << ", got " << it.got;
                std::cout << "\n";
                all = all && it.pass;
            }
            std::cout << (all ? "paper-check: all items pass\n" : "paper-check: FAILURES\n");
            return all ? 0 : 1;
        }
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
