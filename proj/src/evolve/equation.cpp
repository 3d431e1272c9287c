#include "displab/evolve/equation.hpp"

#include <cmath>
#include <stdexcept>

#include "displab/spectral/fft.hpp"
#include "displab/spectral/ops.hpp"

namespace displab {
namespace {

const cplx kI(0.0, 1.0);

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

bool odd_symbol(EquationKind kind) {
  switch (kind) {
    case EquationKind::kBenjaminOno:
    case EquationKind::kKdv:
    case EquationKind::kDispersiveGamma:
    case EquationKind::kMkdv:
    case EquationKind::kGaugedMkdv:
      return true;
    default:
      return false;
  }
}

}  // namespace

EquationSpec burgers() { return {EquationKind::kBurgers, 0.0, 2.0, +1, true}; }

EquationSpec burgers_bbm(double epsilon) {
  if (epsilon <= 0.0) throw std::invalid_argument("burgers_bbm: epsilon must be > 0");
  return {EquationKind::kBurgersBbm, epsilon, 2.0, +1, true};
}

EquationSpec burgers_parabolic(double epsilon) {
  if (epsilon <= 0.0)
    throw std::invalid_argument("burgers_parabolic: epsilon must be > 0");
  return {EquationKind::kBurgersParabolic, epsilon, 2.0, +1, true};
}

EquationSpec benjamin_ono() { return {EquationKind::kBenjaminOno, 0.0, 2.0, +1, true}; }

EquationSpec kdv() { return {EquationKind::kKdv, 0.0, 2.0, +1, true}; }

EquationSpec dispersive(double gamma) {
  if (gamma < 1.0 || gamma > 2.0)
    throw std::invalid_argument("dispersive: gamma must lie in [1, 2]");
  return {EquationKind::kDispersiveGamma, 0.0, gamma, +1, true};
}

EquationSpec mkdv() { return {EquationKind::kMkdv, 0.0, 2.0, +1, true}; }

EquationSpec gauged_mkdv() { return {EquationKind::kGaugedMkdv, 0.0, 2.0, +1, true}; }

EquationSpec nls_torus(int focusing) {
  if (focusing != +1 && focusing != -1)
    throw std::invalid_argument("nls_torus: focusing must be +1 or -1");
  return {EquationKind::kNlsTorus, 0.0, 2.0, focusing, true};
}

EquationSpec ode_model() { return {EquationKind::kOdeModel, 0.0, 2.0, +1, true}; }

std::string kind_name(EquationKind kind) {
  switch (kind) {
    case EquationKind::kBurgers: return "burgers";
    case EquationKind::kBurgersBbm: return "burgers-bbm";
    case EquationKind::kBurgersParabolic: return "burgers-parabolic";
    case EquationKind::kBenjaminOno: return "bo";
    case EquationKind::kKdv: return "kdv";
    case EquationKind::kDispersiveGamma: return "dispersive-gamma";
    case EquationKind::kMkdv: return "mkdv";
    case EquationKind::kGaugedMkdv: return "gauged-mkdv";
    case EquationKind::kNlsTorus: return "nls-torus";
    case EquationKind::kOdeModel: return "ode-model";
  }
  return "unknown";
}

EquationKind kind_from_name(const std::string& name) {
  for (EquationKind k :
       {EquationKind::kBurgers, EquationKind::kBurgersBbm,
        EquationKind::kBurgersParabolic, EquationKind::kBenjaminOno,
        EquationKind::kKdv, EquationKind::kDispersiveGamma, EquationKind::kMkdv,
        EquationKind::kGaugedMkdv, EquationKind::kNlsTorus,
        EquationKind::kOdeModel}) {
    if (kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown equation kind: " + name);
}

bool real_valued(EquationKind kind) {
  return kind != EquationKind::kNlsTorus && kind != EquationKind::kOdeModel;
}

bool pointwise_phase_flow(EquationKind kind) {
  return kind == EquationKind::kNlsTorus || kind == EquationKind::kOdeModel;
}

cplx linear_symbol(const EquationSpec& eq, double xi) {
  switch (eq.kind) {
    case EquationKind::kBurgers:
    case EquationKind::kBurgersBbm:
    case EquationKind::kOdeModel:
      return cplx(0.0, 0.0);
    case EquationKind::kBurgersParabolic:
      return cplx(-eq.epsilon * xi * xi * xi * xi, 0.0);
    case EquationKind::kBenjaminOno:
      return -kI * sgn(xi) * xi * xi;
    case EquationKind::kKdv:
      return kI * xi * xi * xi;
    case EquationKind::kDispersiveGamma:
      return kI * xi * std::pow(std::fabs(xi), eq.gamma);
    case EquationKind::kMkdv:
    case EquationKind::kGaugedMkdv:
      return kI * xi * xi * xi;
    case EquationKind::kNlsTorus:
      return -kI * xi * xi;
  }
  return cplx(0.0, 0.0);
}

std::vector<cplx> linear_symbol_table(const EquationSpec& eq, const Grid1D& g) {
  std::vector<cplx> table(g.n);
  const bool odd = odd_symbol(eq.kind);
  for (std::size_t j = 0; j < g.n; ++j) {
    if (odd && g.mode_index(j) == -static_cast<long>(g.n) / 2) {
      table[j] = cplx(0.0, 0.0);
      continue;
    }
    table[j] = linear_symbol(eq, g.xi(j));
  }
  return table;
}

void nonlinear_rhs(const EquationSpec& eq, const Grid1D& g,
                   const std::vector<cplx>& coeffs, std::vector<cplx>& out,
                   NonlinearWorkspace& ws) {
  const std::size_t n = g.n;
  if (eq.linear_only) {
    out.assign(n, cplx(0.0, 0.0));
    return;
  }
  const long nyq = -static_cast<long>(n) / 2;
  ws.phys = coeffs;
  fft_inverse(ws.phys);
  ws.tmp.resize(n);
  out.resize(n);

  switch (eq.kind) {
    case EquationKind::kBurgers:
    case EquationKind::kBurgersBbm:
    case EquationKind::kBurgersParabolic:
    case EquationKind::kBenjaminOno:
    case EquationKind::kKdv:
    case EquationKind::kDispersiveGamma: {
      // -u u_x in conservative form -(u^2/2)_x.
      for (std::size_t j = 0; j < n; ++j) ws.tmp[j] = ws.phys[j] * ws.phys[j];
      fft_forward(ws.tmp);
      for (std::size_t j = 0; j < n; ++j) {
        if (g.mode_index(j) == nyq) {
          out[j] = cplx(0.0, 0.0);
          continue;
        }
        const double xi = g.xi(j);
        cplx m = -0.5 * kI * xi;
        if (eq.kind == EquationKind::kBurgersBbm) m /= 1.0 + eq.epsilon * xi * xi;
        out[j] = m * ws.tmp[j];
      }
      if (eq.dealias) dealias_two_thirds(out);
      break;
    }

    case EquationKind::kMkdv:
    case EquationKind::kGaugedMkdv: {
      // -u^2 u_x = -(u^3/3)_x, plus mean(u^2) u_x for the gauged flow.
      for (std::size_t j = 0; j < n; ++j)
        ws.tmp[j] = ws.phys[j] * ws.phys[j] * ws.phys[j];
      cplx mean_sq(0.0, 0.0);
      if (eq.kind == EquationKind::kGaugedMkdv) {
        for (std::size_t j = 0; j < n; ++j) mean_sq += ws.phys[j] * ws.phys[j];
        mean_sq /= static_cast<double>(n);
      }
      fft_forward(ws.tmp);
      for (std::size_t j = 0; j < n; ++j) {
        if (g.mode_index(j) == nyq) {
          out[j] = cplx(0.0, 0.0);
          continue;
        }
        const cplx ixi = kI * g.xi(j);
        out[j] = -(ixi / 3.0) * ws.tmp[j] + mean_sq * ixi * coeffs[j];
      }
      if (eq.dealias) dealias_two_thirds(out);
      break;
    }

    case EquationKind::kNlsTorus:
    case EquationKind::kOdeModel: {
      const double sign = eq.kind == EquationKind::kOdeModel
                              ? 1.0
                              : static_cast<double>(eq.focusing);
      for (std::size_t j = 0; j < n; ++j)
        ws.tmp[j] = std::norm(ws.phys[j]) * ws.phys[j];
      fft_forward(ws.tmp);
      for (std::size_t j = 0; j < n; ++j) out[j] = kI * sign * ws.tmp[j];
      // The ode model is a pointwise phase rotation; masking modes would
      // change the flow, so the dealias flag only applies to the pde.
      if (eq.dealias && eq.kind == EquationKind::kNlsTorus)
        dealias_two_thirds(out);
      break;
    }
  }
}

}  // namespace displab
