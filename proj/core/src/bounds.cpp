#include "cffwb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace cffwb {

std::string tier_name(Tier tier) {
  switch (tier) {
    case Tier::Exact: return "exact";
    case Tier::CertifiedLower: return "certified-lower";
    case Tier::CertifiedUpper: return "certified-upper";
    case Tier::Heuristic: return "heuristic";
  }
  return "?";
}

namespace {

Count ceil_ratio(const Ratio& q) {
  Count result;
  mpz_cdiv_q(result.get_mpz_t(), q.get_num().get_mpz_t(),
             q.get_den().get_mpz_t());
  return result;
}

double ipow(double base, int exp) {  // 0^0 = 1 by convention
  if (exp == 0) return 1.0;
  return std::pow(base, exp);
}

Count max_biclique_formula(int t, int r, int w) {
  Count best = 0;
  for (int tp = 0; tp <= t; ++tp)
    best = std::max(best, Count(binomial(tp, r) * binomial(t - tp, w)));
  return best;
}

}  // namespace

Count BoundEngine::engel_lower(int r, int w, int t) {
  if (w < 1 || r < w || t < r + w)
    throw domain_error("engel_lower: need r >= w >= 1, t >= r + w");
  return binomial(r + w - 1, r) * spencer_R(t - r - w + 2);
}

DensityResult BoundEngine::density_lower(DensityVariant variant, int r, int w,
                                         int t, double c, double epsilon) {
  if (r < 1 || w < 1 || t < r + w)
    throw domain_error("density_lower: need r, w >= 1, t >= r + w");
  DensityResult out;
  switch (variant) {
    case DensityVariant::Rcff: {
      if (w != 1 || r < 2) {
        out.note = "requires w = 1, r >= 2";
        return out;
      }
      out.applicable = true;
      out.value = c * static_cast<double>(static_cast<long>(r) * r) /
                  std::log2(static_cast<double>(r)) *
                  std::log2(static_cast<double>(t));
      out.note = "log base 2";
      return out;
    }
    case DensityVariant::Stinson1: {
      out.applicable = true;
      out.value = 2.0 * c * binomial(r + w, r).get_d() /
                  std::log2(static_cast<double>(r + w)) *
                  std::log2(static_cast<double>(t));
      out.note = "log base 2";
      return out;
    }
    case DensityVariant::Stinson2: {
      long half = (r + w + 1) / 2;
      long threshold = std::max(half * half, 5L);
      if (t <= threshold) {
        out.note = "requires t > max{floor((r+w+1)/2)^2, 5} = " +
                   std::to_string(threshold);
        return out;
      }
      out.applicable = true;
      out.value = 0.7 * c * (r + w) * binomial(r + w, r).get_d() /
                  std::log2(binomial(r + w, r).get_d()) *
                  std::log2(static_cast<double>(t));
      out.note = "log base 2, valid above t = " + std::to_string(threshold);
      return out;
    }
    case DensityVariant::Estimate: {
      if (r < w || r < 2) {
        out.note = "requires r >= w, r >= 2";
        return out;
      }
      Count sum = binomial(r + w, w + 1) + binomial(r + w - 1, w + 1) +
                  3 * binomial(r + w - 4, w - 2);
      out.applicable = true;
      out.value = c * sum.get_d() / std::log2(static_cast<double>(r)) *
                  std::log2(static_cast<double>(t - w + 1));
      out.note = "log base 2";
      return out;
    }
    case DensityVariant::EngelAsymptotic: {
      if (r < w) {
        out.note = "requires r >= w";
        return out;
      }
      double numer = ipow(static_cast<double>(r + w - 2), r + w - 2);
      double denom = ipow(static_cast<double>(w - 1), w - 1) *
                     ipow(static_cast<double>(r - 1), r - 1);
      out.applicable = true;
      out.value = (1.0 - epsilon) * numer / denom *
                  static_cast<double>(spencer_R(t - r - w + 2));
      out.note = "asymptotic, epsilon = " + std::to_string(epsilon);
      return out;
    }
    case DensityVariant::Erdos12: {
      if (!((r == 1 && w == 2) || (r == 2 && w == 1))) {
        out.note = "requires {r, w} = {1, 2}";
        return out;
      }
      out.applicable = true;
      out.value = std::log2(static_cast<double>(t)) / std::log2(1.25);
      out.note = "asymptotic block-count bound, large t only";
      return out;
    }
  }
  return out;
}

Count BoundEngine::fractional_lower(int r, int w, int d, int t) {
  if (w < 1 || r < w || d < 1 || t < r + w)
    throw domain_error("fractional_lower: need 0 < w <= r, d >= 1, t >= r + w");
  Ratio scaled = Ratio(d) * bc_star_formula(t, r, w).value;
  scaled.canonicalize();
  return ceil_ratio(scaled);
}

EngelFractional BoundEngine::engel_fractional_lower(int r, int w, int t) {
  if (w < 1 || r < w || t < r + w)
    throw domain_error("engel_fractional_lower: need r >= w >= 1, t >= r + w");
  Ratio best;
  bool first = true;
  for (int m = w - 1; m <= t - r + 1; ++m) {
    Ratio ratio(binomial(t, m), binomial(t - r - w + 2, m - w + 1));
    ratio.canonicalize();
    if (first || ratio < best) {
      best = ratio;
      first = false;
    }
  }
  EngelFractional out;
  out.raw = best * spencer_R(t - r - w + 2);
  out.raw.canonicalize();
  out.value = ceil_ratio(out.raw);
  return out;
}

double BoundEngine::lovasz_upper(int r, int w, int t) {
  if (w < 1 || r < w || t < r + w)
    throw domain_error("lovasz_upper: need 0 < w <= r, t >= r + w");
  return bc_star_formula(t, r, w).value.get_d() *
         (1.0 + std::log(binomial(t - w, r).get_d()));
}

Count BoundEngine::setpairs_lower(int r, int w, int d, int t,
                                  const SetPairFamily& f) {
  if (r < 1 || w < 1 || d < 1)
    throw domain_error("setpairs_lower: need r, w, d >= 1");
  auto weak = setpairs_weak(f);
  if (!weak.ok)
    throw inapplicable_error(
        "setpairs_lower: family not weakly cross-intersecting, witness (" +
        std::to_string(weak.witness->first) + "," +
        std::to_string(weak.witness->second) + ")");
  for (const auto& [a, b] : f.pairs)
    if (static_cast<int>(a.size()) > r || static_cast<int>(b.size()) > w)
      throw inapplicable_error("setpairs_lower: pair sizes exceed (r, w)");
  if (t < std::max(f.ground_size, r + w))
    throw inapplicable_error("setpairs_lower: t below max{ground size, r + w}");
  Count total = 0;
  for (const auto& [a, b] : f.pairs) {
    int ra = r - static_cast<int>(a.size());
    int wb = w - static_cast<int>(b.size());
    total += certified_lower(ra, wb, d,
                             t - static_cast<int>(a.size() + b.size()));
  }
  return total;
}

Count BoundEngine::recursive_lower(int r, int w, int d, int t, int s) {
  if (r < 1 || w < 1 || d < 1 || s < 1 || s > r + w || t < r + w)
    throw domain_error("recursive_lower: parameter out of range");
  Count item1 = 0;
  for (int i = std::max(0, s - w); i <= std::min(r, s); ++i)
    item1 += binomial(s, i) * certified_lower(r - i, w - s + i, d, t - s);
  Count item2 = 0;
  for (int j = std::max(0, s - r); j <= std::min(w, s); ++j)
    item2 += binomial(s, j) * certified_lower(r - s + j, w - j, d, t - s);
  return std::max(item1, item2);
}

Count BoundEngine::engelb_lower(int r, int w, int d, int t, EngelbKind kind) {
  if (r < 1 || w < 1 || d < 1)
    throw domain_error("engelb_lower: need r, w, d >= 1");
  if (kind == EngelbKind::Lattice) {
    int i = r - 1, j = w - 1;
    if (i < 1 || j < 1)
      throw inapplicable_error("engelb_lower: lattice kind needs r, w >= 2");
    if (t < std::max(2 * i + 2 * j - 1, r + w))
      throw inapplicable_error("engelb_lower: t below family ground size");
    Count paths = std::gcd(i, j) == 1
                      ? bizley_count(i, j)
                      : Count(static_cast<long>(
                            enumerate_lattice_paths(i, j).size()));
    Count g = Count(2 * i + 2 * j - 1) * paths;
    return g * certified_lower(1, 1, d, t - i - j);
  }
  // symmetric kind: (2 - 1/(2r-2)) C(2r-2, r-1) pairs on a 4r-6 ground set
  if (r != w || r < 2)
    throw inapplicable_error("engelb_lower: symmetric kind needs r = w >= 2");
  if (t < std::max(4 * r - 6, 2 * r))
    throw inapplicable_error("engelb_lower: t below family ground size");
  Count g;
  mpz_fdiv_q(g.get_mpz_t(),
             Count(Count(4 * r - 5) * binomial(2 * r - 2, r - 1)).get_mpz_t(),
             Count(2 * r - 2).get_mpz_t());
  return g * certified_lower(1, 1, d, t - 2 * r + 2);
}

std::optional<Count> BoundEngine::exact_value(int r, int w, int d, int t) {
  if (w > r) std::swap(r, w);
  if (r < 1 || w < 1 || d < 1 || t < r + w) return std::nullopt;
  if (r == 1 && w == 1 && d == 1) return Count(spencer_R(t));
  // dense range: t <= r + w + r/w forces the star cover to be optimal
  if (d == 1 && static_cast<long>(w) * t <= static_cast<long>(w) * (r + w) + r)
    return binomial(t, w);
  // Hadamard construction matches the fractional lower bound
  if (r == 1 && w == 1 && t == 4 * d - 1 && hadamard_constructible(4 * d))
    return Count(t);
  // orbit construction: d a multiple of B(I_t) t! / |E(I_t)|
  if (t <= 60) {
    Count edges = binomial(t, r) * binomial(t - r, w);
    Count num = max_biclique_formula(t, r, w) * factorial(t);
    if (num % edges == 0) {
      Count q = num / edges;
      if (q >= 1 && Count(d) % q == 0) return Count(d) / q * factorial(t);
    }
  }
  return std::nullopt;
}

Count BoundEngine::certified_lower(int r, int w, int d, int t) {
  if (r < 0 || w < 0 || d < 1)
    throw domain_error("certified_lower: bad parameters");
  if (r == 0 || w == 0) return 1;  // convention
  if (w > r) std::swap(r, w);
  if (t < r + w)
    throw domain_error("certified_lower: need t >= r + w");
  auto key = std::make_tuple(r, w, d, t);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  if (auto ex = exact_value(r, w, d, t)) {
    memo_[key] = *ex;
    return *ex;
  }

  Count best = Count(d) * binomial(r + w, r);  // induced-matching bound
  best = std::max(best, fractional_lower(r, w, d, t));
  if (d == 1) {
    best = std::max(best, engel_lower(r, w, t));
    best = std::max(best, engel_fractional_lower(r, w, t).value);
  }
  for (EngelbKind kind : {EngelbKind::Lattice, EngelbKind::Symmetric}) {
    try {
      best = std::max(best, engelb_lower(r, w, d, t, kind));
    } catch (const inapplicable_error&) {
    }
  }
  try {
    best = std::max(best, setpairs_lower(r, w, d, t, chain_setpairs(r, w)));
  } catch (const inapplicable_error&) {
  }
  for (int s = 1; s <= r + w; ++s)
    best = std::max(best, recursive_lower(r, w, d, t, s));

  memo_[key] = best;
  return best;
}

namespace {

std::string format_count(const Count& v) { return v.get_str(); }

std::string format_ratio(const Ratio& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string format_value(const std::variant<Count, Ratio, double>& v) {
  if (std::holds_alternative<Count>(v)) return format_count(std::get<Count>(v));
  if (std::holds_alternative<Ratio>(v)) return format_ratio(std::get<Ratio>(v));
  return format_real(std::get<double>(v));
}

}  // namespace

BoundReport BoundEngine::best_bounds(int r, int w, int d, int t,
                                     std::optional<double> c) {
  if (!(0 < w && w <= r && t >= r + w && d >= 1))
    throw domain_error("best_bounds: need 0 < w <= r, t >= r + w, d >= 1");
  if (r + w > 12 || t > 60)
    throw budget_error("best_bounds: capped at r + w <= 12, t <= 60");

  BoundReport report;
  report.r = r;
  report.w = w;
  report.d = d;
  report.t = t;
  report.c = c;

  auto add = [&](std::string name, Tier tier, bool applicable,
                 std::variant<Count, Ratio, double> value, std::string note) {
    report.entries.push_back(
        {std::move(name), tier, applicable, std::move(value), std::move(note)});
  };

  report.exact = exact_value(r, w, d, t);
  if (report.exact)
    add("exact", Tier::Exact, true, *report.exact, "catalogued exact value");
  else
    add("exact", Tier::Exact, false, Count(0), "no catalogued case matches");

  // certified lower bounds
  add("induced_matching", Tier::CertifiedLower, true,
      Count(Count(d) * binomial(r + w, r)), "d * C(r+w, r)");
  add("fractional", Tier::CertifiedLower, true, fractional_lower(r, w, d, t),
      "ceil(d * bc*)");
  if (d == 1) {
    add("engel", Tier::CertifiedLower, true, engel_lower(r, w, t),
        "C(r+w-1, r) * R(t-r-w+2)");
    auto ef = engel_fractional_lower(r, w, t);
    add("engel_fractional", Tier::CertifiedLower, true, ef.value,
        "ceil of " + format_ratio(ef.raw));
  } else {
    add("engel", Tier::CertifiedLower, false, Count(0), "d = 1 only");
    add("engel_fractional", Tier::CertifiedLower, false, Count(0),
        "d = 1 only");
  }
  {
    Count best_rec = 0;
    int best_s = 0;
    for (int s = 1; s <= r + w; ++s) {
      Count v = recursive_lower(r, w, d, t, s);
      if (s == 1 || v > best_rec) {
        best_rec = v;
        best_s = s;
      }
    }
    add("recursive", Tier::CertifiedLower, true, best_rec,
        "s-subset recursion, best s = " + std::to_string(best_s));
  }
  for (auto [kind, name] :
       {std::pair{EngelbKind::Lattice, "engelb_lattice"},
        std::pair{EngelbKind::Symmetric, "engelb_symmetric"}}) {
    try {
      add(name, Tier::CertifiedLower, true, engelb_lower(r, w, d, t, kind),
          "cross-intersecting family bound");
    } catch (const inapplicable_error& e) {
      add(name, Tier::CertifiedLower, false, Count(0), e.what());
    }
  }
  try {
    add("setpairs_chain", Tier::CertifiedLower, true,
        setpairs_lower(r, w, d, t, chain_setpairs(r, w)), "chain family");
  } catch (const inapplicable_error& e) {
    add("setpairs_chain", Tier::CertifiedLower, false, Count(0), e.what());
  }

  // certified upper bounds
  Count star = Count(d) * binomial(t, w);
  add("star_cover", Tier::CertifiedUpper, true, star, "d * C(t, w)");
  std::optional<double> lovasz;
  if (d == 1) {
    lovasz = lovasz_upper(r, w, t);
    add("lovasz", Tier::CertifiedUpper, true, *lovasz,
        "bc* * (1 + ln C(t-w, r)), natural log");
  } else {
    add("lovasz", Tier::CertifiedUpper, false, 0.0, "d = 1 only");
  }
  std::optional<Count> orbit_upper;
  if (t <= 20) {
    Count edges = binomial(t, r) * binomial(t - r, w);
    Count num = max_biclique_formula(t, r, w) * factorial(t);
    if (num % edges == 0) {
      Count q = num / edges;
      if (q >= 1 && Count(d) % q == 0) orbit_upper = Count(d) / q * factorial(t);
    }
  }
  if (orbit_upper)
    add("orbit_construction", Tier::CertifiedUpper, true, *orbit_upper,
        "repeated orbit cover");
  else
    add("orbit_construction", Tier::CertifiedUpper, false, Count(0),
        "d not a multiple of the orbit coverage");
  std::optional<Count> hadamard_upper;
  if (r == 1 && w == 1 && t == 4 * d - 1 && hadamard_constructible(4 * d))
    hadamard_upper = Count(t);
  if (hadamard_upper)
    add("hadamard_construction", Tier::CertifiedUpper, true, *hadamard_upper,
        "order-" + std::to_string(4 * d) + " Hadamard cover");
  else
    add("hadamard_construction", Tier::CertifiedUpper, false, Count(0),
        "needs r = w = 1, t = 4d-1, constructible order 4d");

  // heuristic entries (only with an explicit constant)
  if (c) {
    for (auto [variant, name] :
         {std::pair{DensityVariant::Rcff, "density_rcff"},
          std::pair{DensityVariant::Stinson1, "density_stinson1"},
          std::pair{DensityVariant::Stinson2, "density_stinson2"},
          std::pair{DensityVariant::Estimate, "density_estimate"},
          std::pair{DensityVariant::EngelAsymptotic, "density_engel_asymptotic"},
          std::pair{DensityVariant::Erdos12, "density_erdos12"}}) {
      DensityResult dres = density_lower(variant, r, w, t, *c);
      add(name, Tier::Heuristic, dres.applicable, dres.value, dres.note);
    }
  }

  // aggregate
  report.best_certified_lower = certified_lower(r, w, d, t);
  Count upper = star;
  if (lovasz) {
    Count lf;
    mpz_set_d(lf.get_mpz_t(), std::floor(*lovasz));
    upper = std::min(upper, lf);
  }
  if (orbit_upper) upper = std::min(upper, *orbit_upper);
  if (hadamard_upper) upper = std::min(upper, *hadamard_upper);
  if (report.exact) upper = std::min(upper, *report.exact);
  report.best_upper = upper;
  return report;
}

std::string emit_report(const BoundReport& report) {
  std::ostringstream out;
  out << "report r=" << report.r << " w=" << report.w << " d=" << report.d
      << " t=" << report.t;
  if (report.c) out << " c=" << format_real(*report.c);
  out << "\n";
  for (const BoundEntry& e : report.entries) {
    out << "entry name=" << e.name << " tier=" << tier_name(e.tier)
        << " applicable=" << (e.applicable ? "true" : "false");
    if (e.applicable) out << " value=" << format_value(e.value);
    if (!e.note.empty()) out << " note=\"" << e.note << "\"";
    out << "\n";
  }
  if (report.best_certified_lower)
    out << "best_certified_lower=" << report.best_certified_lower->get_str()
        << "\n";
  if (report.best_upper)
    out << "best_upper=" << report.best_upper->get_str() << "\n";
  return out.str();
}

std::string format_report(const BoundReport& report) {
  std::ostringstream out;
  out << "N((" << report.r << "," << report.w << ";" << report.d << "),"
      << report.t << ")\n";
  for (const BoundEntry& e : report.entries) {
    out << "  " << e.name;
    for (size_t pad = e.name.size(); pad < 26; ++pad) out << ' ';
    out << "[" << tier_name(e.tier) << "] ";
    if (e.applicable)
      out << format_value(e.value);
    else
      out << "n/a";
    if (!e.note.empty()) out << "  (" << e.note << ")";
    out << "\n";
  }
  if (report.best_certified_lower && report.best_upper)
    out << "  => certified " << report.best_certified_lower->get_str()
        << " <= N <= " << report.best_upper->get_str() << "\n";
  return out.str();
}

}  // namespace cffwb
