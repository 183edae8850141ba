#ifndef GAMMAMORPHIC_TYPES_HPP
#define GAMMAMORPHIC_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace gammamorphic {

using cplx = std::complex<double>;

// Which algorithm produced a value.  "auto_route" means the dispatcher
// picked among the others; the tag reported is the one actually used.
enum class route_tag {
    series,
    weierstrass,
    asymptotic,
    integral,
    euler_limit,
    recursion,
    closed_form,
    zeta_series,
    prelimit,
    integral_of_ln_k,
    g_ratio,
    lattice,
    conversion,
    q_product,
    auto_route,
};

const char* route_name(route_tag r);

struct value_with_error {
    cplx value{};
    double abs_error = 0.0;     // estimated, not guaranteed
    route_tag route = route_tag::auto_route;
};

// Ratio of the second period to the first.  Kept as a distinct type so a
// plain argument cannot be passed where a period ratio is meant.
struct period_ratio {
    cplx alpha{1.0, 0.0};
};

struct period_pair {
    cplx omega1{1.0, 0.0};
    cplx omega2{1.0, 0.0};
};

// ---------------------------------------------------------------------------
// Error taxonomy.  All computational failures are exceptions deriving from
// error; callers that need exit-code mapping catch the base class.

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Argument sits on a pole of the function being evaluated.
class pole_error : public error {
public:
    explicit pole_error(const std::string& what) : error(what) {}
};

// Argument sits on a zero, so the logarithm does not exist.
class zero_error : public error {
public:
    explicit zero_error(const std::string& what) : error(what) {}
};

class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// Requested route cannot reach the requested argument.
class route_domain_error : public domain_error {
public:
    explicit route_domain_error(const std::string& what) : domain_error(what) {}
};

class non_convergence : public error {
public:
    explicit non_convergence(const std::string& what) : error(what) {}
};

class divergent_series : public error {
public:
    explicit divergent_series(const std::string& what) : error(what) {}
};

class singular_integrand : public error {
public:
    explicit singular_integrand(const std::string& what) : error(what) {}
};

// Richardson extrapolation detected noise instead of convergence.
class noisy_function : public error {
public:
    explicit noisy_function(const std::string& what) : error(what) {}
};

// Exact oracle argument exceeds the configured growth cap.
class overflow_policy_error : public error {
public:
    explicit overflow_policy_error(const std::string& what) : error(what) {}
};

// Short name of the dynamic error type ("ZeroError", "PoleError", ...),
// used by the CLI diagnostic stream.
const char* error_kind(const error& e);

} // namespace gammamorphic

#endif
