#ifndef CONFSPHERE_COALGEBRA_HPP
#define CONFSPHERE_COALGEBRA_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace confsphere {

// Index -1 stands for the base component / the unit class "1" throughout.
constexpr int kBase = -1;
constexpr int kUnit = -1;

struct LabelClass {
    std::string id;
    int degree = 0;
    int component = kBase;  // index into CoalgebraSpec::components()
};

// One term coeff * (left (x) right) of a binary coproduct, factors given as
// class indices or kUnit.
struct CoproductTerm {
    long coeff = 0;
    int left = kUnit;
    int right = kUnit;
};

struct ValidationIssue {
    std::string class_id;  // empty for spec-level issues
    std::string message;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<ValidationIssue> issues);
    const std::vector<ValidationIssue>& issues() const { return issues_; }

private:
    std::vector<ValidationIssue> issues_;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The homology coalgebra of the label space X: a finite graded basis with
// components and integral coproduct structure constants. One input serves
// every coefficient field; coefficients are reduced per field at use time.
class CoalgebraSpec {
public:
    CoalgebraSpec() = default;
    CoalgebraSpec(std::string name, std::vector<std::string> components,
                  std::vector<LabelClass> classes,
                  std::vector<std::vector<CoproductTerm>> coproduct);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& components() const { return components_; }
    const std::vector<LabelClass>& classes() const { return classes_; }
    const LabelClass& cls(int i) const { return classes_[(std::size_t)i]; }
    const std::vector<CoproductTerm>& coproduct(int class_index) const {
        return coproduct_[(std::size_t)class_index];
    }

    int find_class(const std::string& id) const;      // -2 when absent
    int grouplike_of(int component) const;            // class index of the component class
    bool connected() const { return components_.empty(); }

    // -1 when x is in the base component, else the grouplike's class index.
    int counit_partner(int class_index) const;

private:
    std::string name_;
    std::vector<std::string> components_;
    std::vector<LabelClass> classes_;
    std::vector<std::vector<CoproductTerm>> coproduct_;
};

// Built-in label spaces.
CoalgebraSpec builtin_sphere(int k);
CoalgebraSpec builtin_two_points();
CoalgebraSpec builtin_cp(int m);
CoalgebraSpec builtin_wedge(const std::vector<CoalgebraSpec>& parts);
CoalgebraSpec builtin_suspension(const CoalgebraSpec& a);  // rejects degree-0 classes

// CLI label grammar: s<k>, cp<m>, wedge:a,b,..., susp:<spec>, else file path.
CoalgebraSpec parse_label(const std::string& text);

// JSON file loader; throws ParseError (with position) or ValidationError.
CoalgebraSpec load_spec(const std::string& path);
CoalgebraSpec load_spec_from_string(const std::string& json_text);

// Checks every CoalgebraSpec invariant; failures are collected, not fail-fast.
std::vector<ValidationIssue> validate(const CoalgebraSpec& spec);

}  // namespace confsphere

#endif
