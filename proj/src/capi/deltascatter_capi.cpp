#include "deltascatter/deltascatter.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "deltascatter/analysis.hpp"
#include "deltascatter/closed_forms.hpp"
#include "deltascatter/direct_solver.hpp"
#include "deltascatter/error.hpp"
#include "deltascatter/transfer.hpp"
#include "deltascatter/wavefunction.hpp"

namespace ds = deltascatter;

struct ds_system {
  ds::SystemTemplate source;
  ds::DimensionlessSystem system;
};

struct ds_solution {
  ds::AmplitudeSolution amplitudes;
  double residual = 0.0;
};

struct ds_sweep_result {
  std::vector<ds_sweep_record> records;
  std::size_t skipped = 0;
};

struct ds_resonances {
  std::vector<ds_resonance_hit> hits;
};

namespace {

thread_local std::string g_last_error;

ds_status to_status(ds::ErrorKind kind) {
  switch (kind) {
    case ds::ErrorKind::kDomain: return DS_ERR_DOMAIN;
    case ds::ErrorKind::kOrdering: return DS_ERR_ORDERING;
    case ds::ErrorKind::kSingular: return DS_ERR_SINGULAR;
    case ds::ErrorKind::kDegenerate: return DS_ERR_DEGENERATE;
    case ds::ErrorKind::kPole: return DS_ERR_POLE;
    case ds::ErrorKind::kInvalidArgument: return DS_ERR_INVALID_ARGUMENT;
  }
  return DS_ERR_INTERNAL;
}

ds_status fail(ds_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <class Fn>
ds_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DS_OK;
  } catch (const ds::Error& e) {
    return fail(to_status(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DS_ERR_INTERNAL, e.what());
  }
}

ds_complex wrap(ds::Complex z) { return {z.real(), z.imag()}; }
ds::Complex unwrap(ds_complex z) { return {z.re, z.im}; }

void wrap_matrix(const ds::TransferMatrix& m, ds_complex out[4]) {
  out[0] = wrap(m.m11());
  out[1] = wrap(m.m12());
  out[2] = wrap(m.m21());
  out[3] = wrap(m.m22());
}

ds_status store(const ds::Amplitudes& amp, ds_complex* t, ds_complex* r) {
  if (t) *t = wrap(amp.t);
  if (r) *r = wrap(amp.r);
  return DS_OK;
}

std::vector<double> copy(const double* p, std::size_t n) {
  return p ? std::vector<double>(p, p + n) : std::vector<double>{};
}

std::vector<double> diffs(std::span<const double> v) {
  std::vector<double> out;
  for (std::size_t i = 1; i < v.size(); ++i) out.push_back(v[i] - v[i - 1]);
  return out;
}

ds::SweepParameter to_parameter(ds_sweep_param p) {
  switch (p) {
    case DS_PARAM_GAP: return ds::SweepParameter::kGap;
    case DS_PARAM_STRENGTH: return ds::SweepParameter::kStrength;
    case DS_PARAM_WAVENUMBER: return ds::SweepParameter::kWavenumber;
  }
  throw ds::Error(ds::ErrorKind::kInvalidArgument, "unknown sweep parameter");
}

ds::SweepSpec to_spec(const ds_system* base, const ds_sweep_spec* spec) {
  ds::SweepSpec s;
  s.base = base->source;
  s.parameter = to_parameter(spec->param);
  s.lo = spec->lo;
  s.hi = spec->hi;
  s.steps = spec->steps;
  return s;
}

#define DS_REQUIRE(cond, msg) \
  do {                        \
    if (!(cond)) return fail(DS_ERR_INVALID_ARGUMENT, msg); \
  } while (0)

ds_status make_reduced(const ds::PotentialArray& array, ds_system** out) {
  ds::DimensionlessSystem system = ds::to_dimensionless(array);
  const double x0 = array.positions.front();
  *out = new ds_system{
      ds::SystemTemplate::reduced(array.reduced_strengths, diffs(array.positions),
                                  array.k, x0),
      std::move(system)};
  return DS_OK;
}

}  // namespace

extern "C" {

const char* ds_version(void) { return "1.0.0"; }

const char* ds_status_string(ds_status status) {
  switch (status) {
    case DS_OK: return "ok";
    case DS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DS_ERR_DOMAIN: return "domain error";
    case DS_ERR_ORDERING: return "ordering error";
    case DS_ERR_SINGULAR: return "singular system";
    case DS_ERR_DEGENERATE: return "degenerate transfer matrix";
    case DS_ERR_POLE: return "pole";
    case DS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ds_last_error(void) { return g_last_error.c_str(); }

ds_status ds_system_create(const double* xi, size_t n, const double* gaps,
                           double y0, ds_system** out) {
  DS_REQUIRE(out && xi && n > 0, "xi and out must be non-null, n > 0");
  DS_REQUIRE(n == 1 || gaps, "gaps must be non-null for n > 1");
  *out = nullptr;
  return guarded([&] {
    auto strengths = copy(xi, n);
    auto g = copy(gaps, n - 1);
    ds::DimensionlessSystem system = ds::DimensionlessSystem::from_gaps(strengths, g, y0);
    *out = new ds_system{
        ds::SystemTemplate::dimensionless(std::move(strengths), std::move(g), y0),
        std::move(system)};
  });
}

ds_status ds_system_create_sites(const double* xi, const double* y, size_t n,
                                 ds_system** out) {
  DS_REQUIRE(out && xi && y && n > 0, "xi, y and out must be non-null, n > 0");
  *out = nullptr;
  return guarded([&] {
    ds::DimensionlessSystem system(copy(xi, n), copy(y, n));
    *out = new ds_system{
        ds::SystemTemplate::dimensionless(copy(xi, n), system.gaps(), y[0]),
        std::move(system)};
  });
}

ds_status ds_system_create_reduced(const double* vtilde, const double* positions,
                                   size_t n, double k, ds_system** out) {
  DS_REQUIRE(out && vtilde && positions && n > 0,
             "vtilde, positions and out must be non-null, n > 0");
  *out = nullptr;
  return guarded([&] {
    make_reduced({copy(vtilde, n), copy(positions, n), k}, out);
  });
}

ds_status ds_system_create_physical(double mass, double hbar, double energy,
                                    const double* v0, const double* positions,
                                    size_t n, ds_system** out) {
  DS_REQUIRE(out && v0 && positions && n > 0,
             "v0, positions and out must be non-null, n > 0");
  *out = nullptr;
  return guarded([&] {
    ds::PhysicalInput input{mass, hbar, energy, copy(v0, n), copy(positions, n)};
    make_reduced(ds::physical_to_reduced(input), out);
  });
}

void ds_system_destroy(ds_system* sys) { delete sys; }

size_t ds_system_size(const ds_system* sys) { return sys ? sys->system.size() : 0; }

ds_status ds_system_sites(const ds_system* sys, double* xi, double* y) {
  DS_REQUIRE(sys, "system must be non-null");
  for (std::size_t i = 0; i < sys->system.size(); ++i) {
    if (xi) xi[i] = sys->system.xi()[i];
    if (y) y[i] = sys->system.y()[i];
  }
  return DS_OK;
}

ds_status ds_system_wavenumber(const ds_system* sys, double* k) {
  DS_REQUIRE(sys && k, "system and k must be non-null");
  DS_REQUIRE(sys->source.physical, "system was built from dimensionless input");
  *k = sys->source.k;
  return DS_OK;
}

ds_status ds_solve_direct(const ds_system* sys, ds_solution** out) {
  DS_REQUIRE(sys && out, "system and out must be non-null");
  *out = nullptr;
  return guarded([&] {
    const ds::LinearSystem ls = ds::assemble_system(sys->system);
    const std::vector<ds::Complex> x = ds::solve_linear(ls);
    auto sol = std::make_unique<ds_solution>();
    sol->residual = ds::residual_norm(ls, x);
    sol->amplitudes.r = x.front();
    sol->amplitudes.t = x.back();
    for (std::size_t k = 1; k + 1 < x.size(); k += 2) {
      sol->amplitudes.interior.emplace_back(x[k], x[k + 1]);
    }
    *out = sol.release();
  });
}

void ds_solution_destroy(ds_solution* sol) { delete sol; }

ds_complex ds_solution_r(const ds_solution* sol) {
  return sol ? wrap(sol->amplitudes.r) : ds_complex{0.0, 0.0};
}

ds_complex ds_solution_t(const ds_solution* sol) {
  return sol ? wrap(sol->amplitudes.t) : ds_complex{0.0, 0.0};
}

double ds_solution_transmission(const ds_solution* sol) {
  return sol ? sol->amplitudes.transmission() : 0.0;
}

double ds_solution_reflection(const ds_solution* sol) {
  return sol ? sol->amplitudes.reflection() : 0.0;
}

double ds_solution_residual(const ds_solution* sol) { return sol ? sol->residual : 0.0; }

size_t ds_solution_region_count(const ds_solution* sol) {
  return sol ? sol->amplitudes.region_count() : 0;
}

ds_status ds_solution_region(const ds_solution* sol, size_t region, ds_complex* a,
                             ds_complex* b) {
  DS_REQUIRE(sol, "solution must be non-null");
  return guarded([&] {
    const auto [ca, cb] = sol->amplitudes.region(region);
    if (a) *a = wrap(ca);
    if (b) *b = wrap(cb);
  });
}

ds_status ds_solve_transfer(const ds_system* sys, ds_complex* t, ds_complex* r) {
  DS_REQUIRE(sys, "system must be non-null");
  return guarded([&] { store(ds::transfer_amplitudes(sys->system), t, r); });
}

ds_status ds_transfer_matrix(const ds_system* sys, ds_complex m[4]) {
  DS_REQUIRE(sys && m, "system and m must be non-null");
  return guarded([&] { wrap_matrix(ds::total_matrix(sys->system), m); });
}

ds_status ds_delta_matrix(double xi, double y0, ds_complex m[4]) {
  DS_REQUIRE(m, "m must be non-null");
  return guarded([&] { wrap_matrix(ds::delta_matrix(xi, y0), m); });
}

ds_status ds_amplitudes_from_matrix(const ds_complex m[4], ds_complex* t,
                                    ds_complex* r) {
  DS_REQUIRE(m, "m must be non-null");
  return guarded([&] {
    const ds::TransferMatrix tm{unwrap(m[0]), unwrap(m[1]), unwrap(m[2]), unwrap(m[3])};
    store(ds::amplitudes_from_matrix(tm), t, r);
  });
}

ds_status ds_closed_single(double xi, double y0, ds_complex* t, ds_complex* r) {
  return guarded([&] { store(ds::closed_forms::single(xi, y0), t, r); });
}

ds_status ds_closed_double_equal(double xi, double dt, ds_complex* t, ds_complex* r) {
  return guarded([&] { store(ds::closed_forms::double_equal(xi, dt), t, r); });
}

ds_status ds_closed_double_general(double xi1, double xi2, double dt, ds_complex* t,
                                   ds_complex* r) {
  return guarded([&] { store(ds::closed_forms::double_general(xi1, xi2, dt), t, r); });
}

ds_status ds_closed_triple(double xi1, double xi2, double xi3, double dt1, double dt2,
                           ds_complex* t, ds_complex* r) {
  return guarded(
      [&] { store(ds::closed_forms::triple(xi1, xi2, xi3, dt1, dt2), t, r); });
}

ds_status ds_closed_six_equal(double xi, double dt, ds_complex* t, ds_complex* r) {
  return guarded([&] { store(ds::closed_forms::six_equal(xi, dt), t, r); });
}

ds_status ds_double_resonance_strength(double dt, double* xi) {
  DS_REQUIRE(xi, "xi must be non-null");
  return guarded([&] { *xi = ds::closed_forms::double_resonance_strength(dt); });
}

ds_status ds_wavefunction_default_window(const ds_system* sys, double* ymin,
                                         double* ymax, size_t* count) {
  DS_REQUIRE(sys, "system must be non-null");
  const ds::SampleWindow w = ds::default_window(sys->system);
  if (ymin) *ymin = w.ymin;
  if (ymax) *ymax = w.ymax;
  if (count) *count = w.count;
  return DS_OK;
}

ds_status ds_wavefunction_sample(const ds_system* sys, const ds_solution* sol,
                                 double ymin, double ymax, size_t count,
                                 ds_wave_sample* out) {
  DS_REQUIRE(sys && sol && out, "system, solution and out must be non-null");
  return guarded([&] {
    const auto samples = ds::sample(sys->system, sol->amplitudes, ymin, ymax, count);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      out[i] = {samples[i].y, wrap(samples[i].psi), wrap(samples[i].dpsi),
                samples[i].density};
    }
  });
}

ds_status ds_verify_matching(const ds_system* sys, const ds_solution* sol, double h,
                             ds_site_matching* out) {
  DS_REQUIRE(sys && sol && out, "system, solution and out must be non-null");
  return guarded([&] {
    const auto report = ds::verify_matching(sys->system, sol->amplitudes, h);
    for (std::size_t i = 0; i < report.sites.size(); ++i) {
      const auto& s = report.sites[i];
      out[i] = {s.y, s.continuity_residual, s.analytic_continuity_residual,
                s.jump_residual};
    }
  });
}

ds_status ds_probability_current(const ds_solution* sol, size_t region,
                                 double* current) {
  DS_REQUIRE(sol && current, "solution and current must be non-null");
  return guarded([&] { *current = ds::probability_current(sol->amplitudes, region); });
}

ds_status ds_sweep(const ds_system* base, const ds_sweep_spec* spec,
                   ds_sweep_result** out) {
  DS_REQUIRE(base && spec && out, "base, spec and out must be non-null");
  *out = nullptr;
  return guarded([&] {
    const ds::SweepResult res = ds::sweep(to_spec(base, spec));
    auto result = std::make_unique<ds_sweep_result>();
    result->records.reserve(res.records.size());
    for (const auto& r : res.records) {
      result->records.push_back({r.param, r.transmission, r.reflection});
    }
    result->skipped = res.skipped.size();
    *out = result.release();
  });
}

size_t ds_sweep_result_size(const ds_sweep_result* res) {
  return res ? res->records.size() : 0;
}

const ds_sweep_record* ds_sweep_result_records(const ds_sweep_result* res) {
  return res && !res->records.empty() ? res->records.data() : nullptr;
}

size_t ds_sweep_result_skipped(const ds_sweep_result* res) {
  return res ? res->skipped : 0;
}

void ds_sweep_result_destroy(ds_sweep_result* res) { delete res; }

ds_status ds_find_resonances(const ds_system* base, const ds_sweep_spec* spec,
                             double tol, ds_resonances** out) {
  DS_REQUIRE(base && spec && out, "base, spec and out must be non-null");
  *out = nullptr;
  return guarded([&] {
    const double use_tol = tol > 0.0 ? tol : ds::kDefaultResonanceTolerance;
    const auto hits = ds::find_resonances(to_spec(base, spec), use_tol);
    auto result = std::make_unique<ds_resonances>();
    for (const auto& h : hits) result->hits.push_back({h.param, h.residual});
    *out = result.release();
  });
}

size_t ds_resonances_size(const ds_resonances* res) { return res ? res->hits.size() : 0; }

const ds_resonance_hit* ds_resonances_data(const ds_resonances* res) {
  return res && !res->hits.empty() ? res->hits.data() : nullptr;
}

void ds_resonances_destroy(ds_resonances* res) { delete res; }

}  // extern "C"
