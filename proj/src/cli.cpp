#include "localh/cli.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "localh/batch.hpp"
#include "localh/chebyshev.hpp"
#include "localh/errors.hpp"
#include "localh/multiplier.hpp"
#include "localh/root_systems.hpp"
#include "localh/sturm.hpp"
#include "localh/xi_basis.hpp"

namespace localh::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rational& r : v) out.push_back(to_string(r));
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

ordered_json intervals_json(const std::vector<RootInterval>& ivs) {
  ordered_json arr = ordered_json::array();
  for (const RootInterval& iv : ivs)
    arr.push_back(ordered_json{{"lo", to_string(iv.lo)},
                               {"hi", to_string(iv.hi)},
                               {"multiplicity", iv.multiplicity}});
  return arr;
}

std::string intervals_pretty(const std::vector<RootInterval>& ivs) {
  std::vector<std::string> parts;
  parts.reserve(ivs.size());
  for (const RootInterval& iv : ivs) {
    std::string s = "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
    if (iv.multiplicity > 1) s += "x" + std::to_string(iv.multiplicity);
    parts.push_back(std::move(s));
  }
  return "[" + join(parts, ", ") + "]";
}

// ---------------------------------------------------------------------------
// Selector resolution

std::vector<RootSystem> resolve_systems(const RunConfig& cfg) {
  if (!cfg.type) throw std::invalid_argument("--type is required for this command");
  const std::string& t = *cfg.type;
  auto range_of = [&cfg](const char* what) {
    if (cfg.ranks) {
      if (cfg.ranks->first > cfg.ranks->second)
        throw std::invalid_argument("empty range: " + std::to_string(cfg.ranks->first) +
                                    ".." + std::to_string(cfg.ranks->second));
      return *cfg.ranks;
    }
    if (cfg.rank) return std::make_pair(*cfg.rank, *cfg.rank);
    throw std::invalid_argument(std::string("--rank or --ranks is required for type ") +
                                what);
  };
  std::vector<RootSystem> out;
  if (t == "A" || t == "B" || t == "D") {
    auto [lo, hi] = range_of(t.c_str());
    for (int n = lo; n <= hi; ++n)
      out.push_back(t == "A"   ? RootSystem::A(n)
                    : t == "B" ? RootSystem::B(n)
                               : RootSystem::D(n));
    return out;
  }
  if (t == "I2") {
    if (cfg.param) {
      out.push_back(RootSystem::I2(*cfg.param));
      return out;
    }
    if (cfg.ranks) {
      auto [lo, hi] = *cfg.ranks;
      if (lo > hi) throw std::invalid_argument("empty range for I2 parameter");
      for (int m = lo; m <= hi; ++m) out.push_back(RootSystem::I2(m));
      return out;
    }
    throw std::invalid_argument("--param or --ranks is required for type I2");
  }
  if (cfg.rank || cfg.ranks || cfg.param)
    throw std::invalid_argument("type " + t + " takes no rank or parameter");
  if (t == "H3") return {RootSystem::H3()};
  if (t == "H4") return {RootSystem::H4()};
  if (t == "F4") return {RootSystem::F4()};
  if (t == "E6") return {RootSystem::E6()};
  if (t == "E7") return {RootSystem::E7()};
  if (t == "E8") return {RootSystem::E8()};
  throw std::invalid_argument("unknown root-system type '" + t +
                              "' (expected A, B, D, I2, H3, H4, F4, E6, E7, E8)");
}

void emit_system_fields(ordered_json& j, const RootSystem& rs) {
  j["type"] = family_name(rs.family());
  j["rank"] = rs.rank();
  if (rs.family() == Family::I2) j["param"] = rs.parameter();
}

// ---------------------------------------------------------------------------
// xi / local-h

int run_xi(const RunConfig& cfg, std::ostream& out) {
  const std::vector<RootSystem> systems = resolve_systems(cfg);
  if (cfg.format == OutputFormat::Csv) out << "type,rank,param,xi\n";
  for (const RootSystem& rs : systems) {
    const XiVector v = xi_vector(rs);
    const std::vector<std::string> xs = rational_strings(v.xi);
    switch (cfg.format) {
      case OutputFormat::JsonLines: {
        ordered_json j;
        emit_system_fields(j, rs);
        j["xi"] = xs;
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::Csv:
        out << family_name(rs.family()) << "," << rs.rank() << ","
            << (rs.family() == Family::I2 ? std::to_string(rs.parameter()) : "")
            << "," << join(xs, ";") << "\n";
        break;
      case OutputFormat::Pretty:
        out << rs.name() << " rank=" << rs.rank() << " xi=[" << join(xs, ", ")
            << "]\n";
        break;
    }
  }
  return 0;
}

int run_local_h(const RunConfig& cfg, std::ostream& out) {
  const std::vector<RootSystem> systems = resolve_systems(cfg);
  if (cfg.format == OutputFormat::Csv) out << "type,rank,param,coeffs\n";
  for (const RootSystem& rs : systems) {
    const Poly ell = local_h(rs);
    const std::vector<std::string> cs = rational_strings(ell.coeffs());
    switch (cfg.format) {
      case OutputFormat::JsonLines: {
        ordered_json j;
        emit_system_fields(j, rs);
        j["coeffs"] = cs;
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::Csv:
        out << family_name(rs.family()) << "," << rs.rank() << ","
            << (rs.family() == Family::I2 ? std::to_string(rs.parameter()) : "")
            << "," << join(cs, ";") << "\n";
        break;
      case OutputFormat::Pretty:
        out << rs.name() << " rank=" << rs.rank() << " local_h=" << to_string(ell)
            << "\n";
        break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyRecord {
  bool degenerate = false;
  bool real_rooted = false;
  int distinct = 0;
  int neg_inf_to_m1 = 0;
  int m1_to_0 = 0;
  int at_0 = 0;
  int at_m1 = 0;
  Poly ell;
  std::vector<RootInterval> intervals;
  long runtime_ms = 0;
};

CertifyRecord certify_one(const RootSystem& rs, bool show_roots) {
  const auto start = Clock::now();
  CertifyRecord rec;
  rec.ell = local_h(rs);
  if (rec.ell.is_zero()) {
    rec.degenerate = true;
    rec.real_rooted = true;  // zero polynomial, by convention
    rec.runtime_ms = elapsed_ms(start);
    return rec;
  }
  // Divide out the known roots at 0 and -1; Sturm counting needs non-root
  // endpoints and the residual polynomial is usually squarefree.
  auto [e1, m0] = deflate(rec.ell, Rational(0));
  auto [e2, m1] = deflate(e1, Rational(-1));
  rec.at_0 = m0;
  rec.at_m1 = m1;
  const RealRootCertificate inner = certify_real_rooted(e2);
  rec.real_rooted = inner.total_with_multiplicity + m0 + m1 ==
                    static_cast<int>(rec.ell.degree());
  rec.distinct = inner.distinct_real_roots + (m0 > 0 ? 1 : 0) + (m1 > 0 ? 1 : 0);
  if (!e2.is_zero() && e2.degree() >= 1) {
    rec.neg_inf_to_m1 = count_roots_in(e2, ExtendedBound::neg_infinity(),
                                       ExtendedBound::finite(Rational(-1)));
    rec.m1_to_0 = count_roots_in(e2, ExtendedBound::finite(Rational(-1)),
                                 ExtendedBound::finite(Rational(0)));
  }
  if (show_roots)
    rec.intervals =
        isolate_real_roots(rec.ell, rational(1, 1024));
  rec.runtime_ms = elapsed_ms(start);
  return rec;
}

int run_certify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<RootSystem> systems = resolve_systems(cfg);
  const bool show_roots = cfg.show_roots;
  const std::vector<CertifyRecord> recs = parallel_map_ordered<CertifyRecord>(
      systems.size(),
      [&](std::size_t i) { return certify_one(systems[i], show_roots); });
  if (cfg.format == OutputFormat::Csv)
    out << "type,rank,param,coeffs,real_rooted,distinct_roots,neg_inf_to_m1,"
           "m1_to_0,at_0,at_m1,degenerate,runtime_ms\n";
  bool all_ok = true;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const RootSystem& rs = systems[i];
    const CertifyRecord& r = recs[i];
    all_ok = all_ok && r.real_rooted;
    const std::vector<std::string> cs = rational_strings(r.ell.coeffs());
    const long shown_ms = cfg.timings ? r.runtime_ms : 0;
    switch (cfg.format) {
      case OutputFormat::JsonLines: {
        ordered_json j;
        emit_system_fields(j, rs);
        j["coeffs"] = cs;
        j["real_rooted"] = r.real_rooted;
        j["distinct_roots"] = r.distinct;
        j["counts"] = ordered_json{{"neg_inf_to_m1", r.neg_inf_to_m1},
                                   {"m1_to_0", r.m1_to_0},
                                   {"at_0", r.at_0},
                                   {"at_m1", r.at_m1}};
        j["degenerate"] = r.degenerate;
        if (show_roots) j["intervals"] = intervals_json(r.intervals);
        j["runtime_ms"] = shown_ms;
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::Csv:
        out << family_name(rs.family()) << "," << rs.rank() << ","
            << (rs.family() == Family::I2 ? std::to_string(rs.parameter()) : "")
            << "," << join(cs, ";") << "," << (r.real_rooted ? "true" : "false")
            << "," << r.distinct << "," << r.neg_inf_to_m1 << "," << r.m1_to_0
            << "," << r.at_0 << "," << r.at_m1 << ","
            << (r.degenerate ? "true" : "false") << "," << shown_ms << "\n";
        break;
      case OutputFormat::Pretty:
        out << rs.name() << " rank=" << rs.rank()
            << " real_rooted=" << yesno(r.real_rooted)
            << " distinct=" << r.distinct << " neg_inf_to_m1=" << r.neg_inf_to_m1
            << " m1_to_0=" << r.m1_to_0 << " at_0=" << r.at_0
            << " at_m1=" << r.at_m1;
        if (r.degenerate) out << " degenerate=yes";
        if (show_roots) out << " intervals=" << intervals_pretty(r.intervals);
        if (cfg.timings) out << " runtime_ms=" << r.runtime_ms;
        out << "\n";
        break;
    }
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// transfer-check

struct TransferRecord {
  bool degenerate = false;
  bool pass = true;
  XiVector xi;
  std::optional<TransferReport> report;
};

int run_transfer_check(const RunConfig& cfg, std::ostream& out) {
  const std::vector<RootSystem> systems = resolve_systems(cfg);
  const std::vector<TransferRecord> recs = parallel_map_ordered<TransferRecord>(
      systems.size(), [&](std::size_t i) {
        TransferRecord rec;
        rec.xi = xi_vector(systems[i]);
        bool all_zero = true;
        for (const Rational& c : rec.xi.xi)
          if (sign(c) != 0) all_zero = false;
        if (all_zero) {
          rec.degenerate = true;
          return rec;
        }
        rec.report = realrootedness_transfer_check(rec.xi);
        rec.pass = rec.report->certificates_agree &&
                   (!rec.report->locations || rec.report->locations->matches_claim);
        return rec;
      });
  if (cfg.format == OutputFormat::Csv)
    out << "type,rank,param,xi,xi_real_rooted,local_h_real_rooted,agree,"
           "matches_claim,degenerate\n";
  bool all_ok = true;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const RootSystem& rs = systems[i];
    const TransferRecord& r = recs[i];
    all_ok = all_ok && r.pass;
    const std::vector<std::string> xs = rational_strings(r.xi.xi);
    const bool xi_rr = r.report && r.report->xi_certificate.is_real_rooted;
    const bool lh_rr = r.report && r.report->local_h_certificate.is_real_rooted;
    const bool agree = !r.report || r.report->certificates_agree;
    const bool matches =
        r.report && r.report->locations && r.report->locations->matches_claim;
    switch (cfg.format) {
      case OutputFormat::JsonLines: {
        ordered_json j;
        emit_system_fields(j, rs);
        j["xi"] = xs;
        j["degenerate"] = r.degenerate;
        if (r.report) {
          j["xi_real_rooted"] = xi_rr;
          j["local_h_real_rooted"] = lh_rr;
          j["agree"] = r.report->certificates_agree;
          if (r.report->locations) {
            const RootLocationCounts& loc = *r.report->locations;
            j["counts"] = ordered_json{{"neg_inf_to_m1", loc.in_neg_inf_to_minus_one},
                                       {"m1_to_0", loc.in_minus_one_to_zero},
                                       {"at_0", loc.multiplicity_at_zero},
                                       {"at_m1", loc.multiplicity_at_minus_one}};
            j["expected_side_count"] = loc.expected_side_count;
            j["matches_claim"] = loc.matches_claim;
          }
        }
        j["pass"] = r.pass;
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::Csv:
        out << family_name(rs.family()) << "," << rs.rank() << ","
            << (rs.family() == Family::I2 ? std::to_string(rs.parameter()) : "")
            << "," << join(xs, ";") << "," << (xi_rr ? "true" : "false") << ","
            << (lh_rr ? "true" : "false") << "," << (agree ? "true" : "false")
            << "," << (matches ? "true" : "false") << ","
            << (r.degenerate ? "true" : "false") << "\n";
        break;
      case OutputFormat::Pretty:
        out << rs.name() << " rank=" << rs.rank();
        if (r.degenerate) {
          out << " degenerate=yes pass=yes\n";
          break;
        }
        out << " xi_real_rooted=" << yesno(xi_rr)
            << " local_h_real_rooted=" << yesno(lh_rr) << " agree=" << yesno(agree);
        if (r.report->locations) {
          const RootLocationCounts& loc = *r.report->locations;
          out << " neg_inf_to_m1=" << loc.in_neg_inf_to_minus_one
              << " m1_to_0=" << loc.in_minus_one_to_zero
              << " expected=" << loc.expected_side_count
              << " matches_claim=" << yesno(loc.matches_claim);
        }
        out << " pass=" << yesno(r.pass) << "\n";
        break;
    }
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// ms-test

MultiplierSeq resolve_sequence(const RunConfig& cfg) {
  if (cfg.explicit_seq) return MultiplierSeq::explicit_seq(*cfg.explicit_seq);
  if (!cfg.seq_name)
    throw std::invalid_argument("ms-test needs --seq NAME or --explicit LIST");
  const std::string& name = *cfg.seq_name;
  if (name == "reciprocal-factorial") return MultiplierSeq::reciprocal_factorial();
  if (name == "reciprocal-shifted-factorial") {
    if (!cfg.param)
      throw std::invalid_argument("--param is required for " + name);
    return MultiplierSeq::reciprocal_shifted_factorial(*cfg.param);
  }
  if (name == "binomial-reciprocal") {
    if (!cfg.param)
      throw std::invalid_argument("--param is required for " + name);
    return MultiplierSeq::binomial_reciprocal(*cfg.param);
  }
  throw UnknownSequence("unknown sequence '" + name +
                        "' (expected reciprocal-factorial, "
                        "reciprocal-shifted-factorial, binomial-reciprocal)");
}

int run_ms_test(const RunConfig& cfg, std::ostream& out) {
  const MultiplierSeq seq = resolve_sequence(cfg);
  const PolyaSchurReport rep = polya_schur_report(seq, cfg.depth);
  if (cfg.format == OutputFormat::Csv)
    out << "n,zero,real_rooted,negative_roots,positive_roots,same_sign,pass\n";
  if (cfg.format == OutputFormat::Pretty)
    out << "sequence=" << seq.describe() << " depth=" << rep.max_n << "\n";
  for (const PolyaSchurVerdict& v : rep.verdicts) {
    switch (cfg.format) {
      case OutputFormat::JsonLines: {
        ordered_json j{{"n", v.n},
                       {"zero", v.identically_zero},
                       {"real_rooted", v.real_rooted},
                       {"negative_roots", v.negative_roots},
                       {"positive_roots", v.positive_roots},
                       {"same_sign", v.same_sign},
                       {"pass", v.pass}};
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::Csv:
        out << v.n << "," << (v.identically_zero ? "true" : "false") << ","
            << (v.real_rooted ? "true" : "false") << "," << v.negative_roots << ","
            << v.positive_roots << "," << (v.same_sign ? "true" : "false") << ","
            << (v.pass ? "true" : "false") << "\n";
        break;
      case OutputFormat::Pretty:
        out << "n=" << v.n << " " << (v.pass ? "pass" : "FAIL");
        if (v.identically_zero)
          out << " (identically zero)";
        else if (!v.real_rooted)
          out << " (not real-rooted)";
        else if (!v.same_sign)
          out << " (roots of both signs)";
        out << "\n";
        break;
    }
  }
  if (cfg.format == OutputFormat::JsonLines) {
    ordered_json j{{"sequence", seq.describe()},
                   {"depth", rep.max_n},
                   {"overall", rep.pass},
                   {"partial_certificate", true}};
    out << j.dump() << "\n";
  } else if (cfg.format == OutputFormat::Pretty) {
    out << "overall=" << (rep.pass ? "PASS" : "FAIL")
        << " (finite-depth check: necessary, not sufficient)\n";
  }
  return rep.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// chebyshev

int run_chebyshev(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.cheb_n) throw std::invalid_argument("chebyshev needs --n");
  const int n = *cfg.cheb_n;
  if (n < 0) throw NegativeOrder("chebyshev: --n must be >= 0");

  const bool recurrence_ok = u_poly(n) == u_poly_closed(n);
  const bool reciprocal_ok = reciprocal_substitution_check(n);

  CertifyOptions opts;
  opts.isolate = true;
  opts.max_width = cfg.show_roots ? rational(1, 1 << 20) : rational(1, 8);
  const Poly h = h_poly(n);
  const RealRootCertificate cert = certify_real_rooted(h, opts);
  bool roots_ok = cert.is_real_rooted &&
                  cert.distinct_real_roots == cert.total_with_multiplicity &&
                  cert.distinct_real_roots == n / 2;
  for (const RootInterval& iv : cert.isolating_intervals)
    roots_ok = roots_ok && sign(iv.hi) < 0;
  if (h.degree() >= 1)
    roots_ok = roots_ok && gcd(h, derivative(h)).degree() == 0;

  const bool oracle_ok = h_root_oracle_agreement(n, cfg.precision_bits);
  const bool all_ok = recurrence_ok && reciprocal_ok && roots_ok && oracle_ok;

  if (cfg.format == OutputFormat::JsonLines) {
    ordered_json j{{"n", n},
                   {"recurrence_vs_closed_form", recurrence_ok},
                   {"reciprocal_substitution", reciprocal_ok},
                   {"h_roots_negative_simple", roots_ok},
                   {"root_oracle_agreement", oracle_ok},
                   {"pass", all_ok}};
    if (cfg.show_roots) j["intervals"] = intervals_json(cert.isolating_intervals);
    out << j.dump() << "\n";
  } else if (cfg.format == OutputFormat::Csv) {
    out << "n,recurrence_vs_closed_form,reciprocal_substitution,"
           "h_roots_negative_simple,root_oracle_agreement,pass\n";
    out << n << "," << (recurrence_ok ? "true" : "false") << ","
        << (reciprocal_ok ? "true" : "false") << "," << (roots_ok ? "true" : "false")
        << "," << (oracle_ok ? "true" : "false") << ","
        << (all_ok ? "true" : "false") << "\n";
  } else {
    out << "n=" << n << "\n";
    out << "recurrence-vs-closed-form " << (recurrence_ok ? "PASS" : "FAIL") << "\n";
    out << "reciprocal-substitution " << (reciprocal_ok ? "PASS" : "FAIL") << "\n";
    out << "h-roots-negative-simple " << (roots_ok ? "PASS" : "FAIL") << "\n";
    out << "root-oracle-agreement " << (oracle_ok ? "PASS" : "FAIL") << "\n";
    if (cfg.show_roots)
      out << "intervals " << intervals_pretty(cert.isolating_intervals) << "\n";
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// narayana-check

int run_narayana_check(const RunConfig& cfg, std::ostream& out) {
  std::pair<int, int> range;
  if (cfg.ranks)
    range = *cfg.ranks;
  else if (cfg.rank)
    range = {*cfg.rank, *cfg.rank};
  else
    throw std::invalid_argument("narayana-check needs --rank or --ranks");
  if (range.first > range.second)
    throw std::invalid_argument("empty range for narayana-check");
  if (cfg.format == OutputFormat::Csv) out << "n,pass\n";
  bool all_ok = true;
  for (int n = range.first; n <= range.second; ++n) {
    const bool ok = verify_d_identity(n);
    all_ok = all_ok && ok;
    switch (cfg.format) {
      case OutputFormat::JsonLines:
        out << ordered_json{{"n", n}, {"pass", ok}}.dump() << "\n";
        break;
      case OutputFormat::Csv:
        out << n << "," << (ok ? "true" : "false") << "\n";
        break;
      case OutputFormat::Pretty:
        out << "n=" << n << " " << (ok ? "PASS" : "FAIL") << "\n";
        break;
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "json-lines") return OutputFormat::JsonLines;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "pretty") return OutputFormat::Pretty;
  throw std::invalid_argument("unknown format '" + s +
                              "' (expected json-lines, csv, pretty)");
}

std::pair<int, int> parse_range(const std::string& s) {
  const std::size_t pos = s.find("..");
  if (pos == std::string::npos)
    throw std::invalid_argument("range must look like A..B, got '" + s + "'");
  try {
    const int a = std::stoi(s.substr(0, pos));
    const int b = std::stoi(s.substr(pos + 2));
    return {a, b};
  } catch (const std::exception&) {
    throw std::invalid_argument("range must look like A..B, got '" + s + "'");
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.out_path) {
    file.open(*cfg.out_path);
    if (!file) {
      err << "error: cannot open output file '" << *cfg.out_path << "'\n";
      return 2;
    }
    sink = &file;
  }
  try {
    if (cfg.command == "xi") return run_xi(cfg, *sink);
    if (cfg.command == "local-h") return run_local_h(cfg, *sink);
    if (cfg.command == "certify") return run_certify(cfg, *sink);
    if (cfg.command == "ms-test") return run_ms_test(cfg, *sink);
    if (cfg.command == "chebyshev") return run_chebyshev(cfg, *sink);
    if (cfg.command == "narayana-check") return run_narayana_check(cfg, *sink);
    if (cfg.command == "transfer-check") return run_transfer_check(cfg, *sink);
    err << "error: unknown command '" << cfg.command << "'\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace localh::cli
