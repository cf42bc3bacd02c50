#ifndef PENDULUM_VERIFY_HPP
#define PENDULUM_VERIFY_HPP

#include "pendulum/normal_form.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pendulum {

/// Published tables could not be read or are malformed.
class GoldenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Printed reference values, parsed from a JSON file.
struct GoldenTables {
    struct KEntry {
        Equilibrium equilibrium;
        int n;
        int order;
        AlphaPoly k20;
        AlphaPoly k02_minus_k20;
    };
    struct SeriesEntry {
        Equilibrium equilibrium;
        int n;
        std::vector<BigRational> first;
        std::vector<BigRational> second;
    };
    std::vector<KEntry> k_tables;
    std::vector<SeriesEntry> series;
    /// The printed P2/N=2 branches (kept for reporting only, never a pass bar).
    std::vector<std::vector<BigRational>> flat_planes;

    static GoldenTables load(const std::string& path);
};

std::string default_golden_path();

enum class VerifyDepth { Quick, Full };
VerifyDepth parse_verify_depth(std::string_view s);

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string summary;
    std::vector<std::string> details;
    double seconds = 0.0;
};

/// Shared state for one verification run: the golden file (loaded lazily)
/// and memoized normal forms.
class VerifyContext {
public:
    explicit VerifyContext(std::string golden_path = default_golden_path());

    const GoldenTables& golden();
    const ResonanceAnalysis& analysis(Equilibrium e, int n);
    const std::string& golden_path() const { return golden_path_; }

private:
    std::string golden_path_;
    std::optional<GoldenTables> golden_;
    std::map<std::pair<int, int>, ResonanceAnalysis> analyses_;
};

CriterionResult check_a1(VerifyContext& ctx);  ///< exact k-tables
CriterionResult check_a2(VerifyContext& ctx);  ///< exact boundary series
CriterionResult check_a3(VerifyContext& ctx);  ///< Mathieu specialization
CriterionResult check_a4(VerifyContext& ctx);  ///< series vs Floquet boundaries
CriterionResult check_a5(VerifyContext& ctx);  ///< P2/N=2 adjudication
CriterionResult check_a6(VerifyContext& ctx);  ///< symplecticity and convergence
CriterionResult check_a7(VerifyContext& ctx);  ///< mu-translation
CriterionResult check_a8(VerifyContext& ctx);  ///< nonlinear spot-checks
CriterionResult check_a9(VerifyContext& ctx);  ///< planar-section tongue roots

struct VerifyReport {
    VerifyDepth depth = VerifyDepth::Quick;
    std::vector<CriterionResult> criteria;
    /// Always filled at full depth.
    std::vector<std::string> p2n2_section;

    bool all_pass() const;
};

/// Quick runs A1-A3; full runs A1-A9 and the P2/N=2 section.
VerifyReport run_verify(VerifyDepth depth, const std::string& golden_path = default_golden_path());

/// Comparison of the computed P2/N=2 tongue against the printed flat planes.
std::vector<std::string> p2n2_discrepancy_section(VerifyContext& ctx);

void print_criterion(const CriterionResult& r, std::ostream& out, bool with_details = true);
void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace pendulum

#endif  // PENDULUM_VERIFY_HPP
