#ifndef GAMMAMORPHIC_IDENTITY_REPORT_HPP
#define GAMMAMORPHIC_IDENTITY_REPORT_HPP

// Report record shared by every identity check, plus the catalog that
// stores each identity's tolerance, verdict, and default parameter grids.
// Domain modules only use the record half; the suite half is implemented
// by the identities translation unit on top of every module at once.

#include <map>
#include <string>
#include <vector>

#include "gammamorphic/types.hpp"

namespace gammamorphic {

enum class identity_id {
    fe_g,
    integer_values,
    duplication,
    multiplication,
    asymptotic,
    int_log_gamma,
    int_log_sin,
    int_x_cot,
    roots_of_unity,
    phi_closed,
    phi_series_1,
    phi_series_2,
    lng_power_series,
    kinkelin_fe,
    gk_relation,
    kinkelin_mult,
    omega_routes,
    raabe_analog,
    k_asymptotic,
    glaisher_def,
    bernoulli_difference,
    bernoulli_raabe,
    gamma_mult,
    g2_fe1,
    g2_fe2,
    g2_inversion,
    g2_alpha_alpha,
    g2_three_term,
    g2_rational,
    g2_euler_lim1,
    g2_euler_lim2,
    g2_lattice,
    g2_alpha1_degeneration,
    reflection,
    gn_fe,
    pn_telescope,
    kn_fe,
    kn_conversion,
    s2_crossroute,
    s2_symmetry,
    s2_inversion,
    s2_shift,
};

enum class identity_status {
    verified,
    erratum_corrected,
    ambiguous_resolved,
    derived_observation,
    unresolved,
};

const char* identity_name(identity_id id);
const char* status_name(identity_status s);

struct identity_report {
    identity_id id{};
    std::map<std::string, double> params;
    cplx lhs{};
    cplx rhs{};
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    identity_status status = identity_status::verified;
    std::string notes;
};

// Fills the residual fields and the pass flag from lhs/rhs; rel_residual
// is measured against max(|lhs|, |rhs|).
void finish_report(identity_report& r);

// ---------------------------------------------------------------------------
// Catalog.  Every identity above carries a stored tolerance, a stored
// status verdict, notes, and a default parameter grid at three densities.
// The grids nest: small is a prefix of standard, standard of dense.

enum class grid_density { small, standard, dense };

struct catalog_entry_view {
    identity_id id{};
    identity_status status = identity_status::verified;
    double tolerance = 0.0;
    std::string notes;
};

// All ids, in canonical (enum) order.
const std::vector<identity_id>& all_identity_ids();

catalog_entry_view catalog_entry(identity_id id);

std::vector<std::map<std::string, double>> catalog_grid(identity_id id,
                                                        grid_density d);

// Reverse of identity_name; false when the name is unknown.
bool identity_from_name(const std::string& name, identity_id& out);

// One identity at explicit parameters.  Tolerance, status, and fallback
// notes come from the catalog, never from the caller.
identity_report run_identity(identity_id id,
                             const std::map<std::string, double>& params);

struct suite_result {
    std::vector<identity_report> reports;
    int total = 0;
    // Failures among entries whose stored status is "verified"; the suite's
    // exit status contract keys off this count alone.
    int verified_failures = 0;
    std::map<std::string, int> status_counts;
};

// Empty filter means the whole catalog.  Reports come back in canonical
// id order, grid order within an id.
suite_result run_suite(const std::vector<identity_id>& filter,
                       grid_density density);

std::string reports_to_json(const std::vector<identity_report>& reports);
std::string reports_to_table(const std::vector<identity_report>& reports);

} // namespace gammamorphic

#endif
