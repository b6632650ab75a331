#include "verlinde/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <sstream>

#include "verlinde/errors.hpp"
#include "verlinde/io.hpp"
#include "verlinde/koszul.hpp"
#include "verlinde/verify.hpp"
#include "verlinde/verlinde_core.hpp"

namespace verlinde::cli {

namespace {

using io::json;

constexpr int kMaxRank = 8;
constexpr long kMaxWeylOrder = 50000;
constexpr std::int64_t kMaxGenus = 1000;

// Dominant weights of level <= h, counted without listing them.
long double weight_count(const RootSystem& rs, std::int64_t h) {
  std::vector<long double> ways(static_cast<std::size_t>(h + 1), 0);
  ways[0] = 1;
  for (auto m : rs.comarks)
    for (std::int64_t t = m; t <= h; ++t) ways[t] += ways[t - m];
  long double total = 0;
  for (auto w : ways) total += w;
  return total;
}

LevelData level_data(const JobConfig& c, std::size_t max_weights) {
  if (c.group.empty()) throw InvalidInput("--group is required for " + c.command + " (e.g. --group A2)");
  if (!c.level) throw InvalidInput("--level is required for " + c.command);
  if (*c.level < 0) throw InvalidInput("--level must be >= 0");
  RootSystem rs = build(c.group);
  if (rs.rank > kMaxRank)
    throw ComputationRefused(rs.name() + " exceeds the supported rank " + std::to_string(kMaxRank));
  if (rs.weyl_order() > kMaxWeylOrder)
    throw ComputationRefused("|W(" + rs.name() + ")| = " + rs.weyl_order().get_str() + " exceeds the limit " +
                             std::to_string(kMaxWeylOrder) + "; use a smaller rank");
  if (*c.level > 100000 || weight_count(rs, *c.level) > static_cast<long double>(max_weights))
    throw ComputationRefused(rs.name() + " at level " + std::to_string(*c.level) + " has more than " +
                             std::to_string(max_weights) + " weights; lower --level");
  return make_level_data(std::move(rs), *c.level);
}

std::int64_t genus_of(const JobConfig& c) {
  if (!c.genus) throw InvalidInput("--genus is required for " + c.command);
  if (*c.genus < 1) throw InvalidInput("--genus must be >= 1");
  if (*c.genus > kMaxGenus) throw ComputationRefused("--genus above " + std::to_string(kMaxGenus) + " is refused");
  return *c.genus;
}

std::string value_text(const Cyclotomic& x) {
  return x.is_rational() ? to_string(x.as_rational()) : x.to_string();
}

std::string term(const Integer& n, const std::string& label) {
  return n == 1 ? label : n.get_str() + "*" + label;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json checks_json(const std::vector<verify::Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return arr;
}

void print_checks(std::ostream& out, const std::vector<verify::Check>& checks, Format f) {
  if (f == Format::Csv) {
    out << "check,pass,detail\n";
    for (const auto& c : checks) out << '"' << c.name << "\"," << (c.pass ? "pass" : "FAIL") << ",\"" << c.detail << "\"\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks)
    out << std::left << std::setw(static_cast<int>(width) + 2) << c.name << (c.pass ? "pass" : "FAIL")
        << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
}

bool all_pass(const std::vector<verify::Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

// Appends the oracle table when --verify was given; returns the exit code.
int finish(const JobConfig& c, const LevelData& ld, json* doc, std::ostream& out) {
  if (!c.verify) {
    if (doc) print_json(out, *doc);
    return kOk;
  }
  const auto checks = verify::run_oracles(ld, c.genus.value_or(3));
  if (doc) {
    (*doc)["verification"] = checks_json(checks);
    print_json(out, *doc);
  } else {
    out << '\n';
    print_checks(out, checks, c.format);
  }
  if (!all_pass(checks)) return kRefused;
  return kOk;
}

int cmd_fusion_table(const JobConfig& c, std::ostream& out, std::ostream& err) {
  const LevelData ld = level_data(c, 150);
  const FusionRing ring = io::cached_fusion_ring(ld, io::resolve_cache_dir(c.cache_dir), err);
  if (c.format == Format::Json) {
    json doc = io::to_json(ring);
    return finish(c, ld, &doc, out);
  }
  if (c.format == Format::Csv) {
    out << io::fusion_csv(ring);
    return finish(c, ld, nullptr, out);
  }
  out << ld.rs.name() << " level " << ld.h << ", " << ring.size() << " weights\n";
  for (std::size_t a = 0; a < ring.size(); ++a)
    for (std::size_t b = a; b < ring.size(); ++b) {
      out << ring.basis[a].to_string() << " x " << ring.basis[b].to_string() << " =";
      bool first = true;
      for (std::size_t k = 0; k < ring.size(); ++k) {
        if (ring.constants[a][b][k] == 0) continue;
        out << (first ? " " : " + ") << term(ring.constants[a][b][k], ring.basis[k].to_string());
        first = false;
      }
      if (first) out << " 0";
      out << '\n';
    }
  return finish(c, ld, nullptr, out);
}

int cmd_verlinde_dim(const JobConfig& c, std::ostream& out) {
  const std::int64_t g = genus_of(c);
  const LevelData ld = level_data(c, 2000);
  const Integer d = verlinde_dimension(ld, g);
  if (c.format == Format::Json) {
    json doc{{"group", ld.rs.name()}, {"level", ld.h}, {"genus", g}, {"dimension", d.get_str()}};
    return finish(c, ld, &doc, out);
  }
  if (c.format == Format::Csv)
    out << "group,level,genus,dimension\n" << ld.rs.name() << ',' << ld.h << ',' << g << ',' << d << '\n';
  else
    out << d << '\n';
  return finish(c, ld, nullptr, out);
}

int cmd_characters(const JobConfig& c, std::ostream& out) {
  const LevelData ld = level_data(c, 150);
  const CharacterTable t = character_table(ld);
  if (c.format == Format::Json) {
    json points = json::array(), chars = json::array(), dsq = json::array();
    for (std::size_t f = 0; f < t.points.size(); ++f) {
      points.push_back(t.points[f].label.coords);
      dsq.push_back(io::to_json(t.delta_sq[f]));
    }
    for (std::size_t a = 0; a < t.weights.size(); ++a) {
      json row = json::array();
      for (const auto& v : t.chi[a]) row.push_back(io::to_json(v));
      chars.push_back({{"weight", t.weights[a].coords}, {"values", row}});
    }
    json doc{{"group", ld.rs.name()}, {"level", ld.h},       {"conductor", ld.conductor},
             {"points", points},      {"delta_sq", dsq},     {"characters", chars},
             {"f_order", t.f_order.get_str()}};
    return finish(c, ld, &doc, out);
  }
  if (c.format == Format::Csv) {
    out << "weight,point,value\n";
    for (std::size_t a = 0; a < t.weights.size(); ++a)
      for (std::size_t f = 0; f < t.points.size(); ++f)
        out << '"' << t.weights[a].to_string() << "\",\"" << t.points[f].label.to_string() << "\",\""
            << value_text(t.chi[a][f]) << "\"\n";
    return finish(c, ld, nullptr, out);
  }
  out << ld.rs.name() << " level " << ld.h << ", values in Q(zeta_" << ld.conductor << "), |F| = " << t.f_order << '\n';
  for (std::size_t f = 0; f < t.points.size(); ++f) {
    out << "point " << t.points[f].label.to_string() << ": Delta^2 = " << value_text(t.delta_sq[f]) << '\n';
    for (std::size_t a = 0; a < t.weights.size(); ++a)
      out << "  chi_" << t.weights[a].to_string() << " = " << value_text(t.chi[a][f]) << '\n';
  }
  return finish(c, ld, nullptr, out);
}

std::string xi_text(const RatVec& xi) {
  std::string s = "(";
  for (std::size_t i = 0; i < xi.size(); ++i) s += (i ? ", " : "") + to_fraction_string(xi[i]);
  return s + ")";
}

int cmd_regular_points(const JobConfig& c, std::ostream& out) {
  const LevelData ld = level_data(c, 2000);
  const auto pts = regular_points(ld);
  if (c.format == Format::Json) {
    json arr = json::array();
    for (const auto& p : pts) {
      json xi = json::array();
      for (const auto& x : p.xi) xi.push_back(to_fraction_string(x));
      arr.push_back({{"label", p.label.coords}, {"xi", xi}});
    }
    json doc{{"group", ld.rs.name()}, {"level", ld.h}, {"shift", ld.shift}, {"points", arr}};
    return finish(c, ld, &doc, out);
  }
  if (c.format == Format::Csv) {
    out << "label,xi\n";
    for (const auto& p : pts) out << '"' << p.label.to_string() << "\",\"" << xi_text(p.xi) << "\"\n";
    return finish(c, ld, nullptr, out);
  }
  out << ld.rs.name() << " level " << ld.h << ", shifted level " << ld.shift << ", " << pts.size() << " points\n";
  for (const auto& p : pts) out << p.label.to_string() << "  xi = " << xi_text(p.xi) << '\n';
  return finish(c, ld, nullptr, out);
}

std::int64_t k_of(const JobConfig& c) {
  if (c.twisting) return c.twisting->k;
  if (!c.k) throw InvalidInput("--k or --twisting is required for " + c.command);
  if (*c.k < 1) throw InvalidInput("--k must be positive");
  if (*c.k > 100000) throw ComputationRefused("--k above 100000 is refused");
  return *c.k;
}

int cmd_so3_table(const JobConfig& c, std::ostream& out) {
  std::vector<so3::TwistingType> types;
  if (c.twisting) {
    types.push_back(*c.twisting);
  } else {
    // Both parity tables: k itself and k + 1.
    const std::int64_t k = k_of(c);
    for (auto kk : {k, k + 1})
      for (const auto& t : so3::all_twistings(kk)) types.push_back(t);
  }
  struct Row {
    so3::KTableEntry e;
    std::size_t lines0 = 0, lines1 = 0;
    bool match() const { return lines0 == e.k0_rank && lines1 == e.k1_rank; }
  };
  std::vector<Row> rows;
  for (const auto& t : types) {
    Row r{so3::k_table(t)};
    for (const auto& l : so3::so3_localisation(t)) (l.degree == 0 ? r.lines0 : r.lines1)++;
    rows.push_back(r);
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.match();

  if (c.format == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"twisting", r.e.twisting.to_string()},
                     {"k0", r.e.k0},
                     {"k1", r.e.k1},
                     {"k0_rank", r.e.k0_rank},
                     {"k1_rank", r.e.k1_rank},
                     {"starred", r.e.starred},
                     {"support_k0", r.lines0},
                     {"support_k1", r.lines1},
                     {"match", r.match()}});
    print_json(out, json{{"rows", arr}});
  } else if (c.format == Format::Csv) {
    out << "twisting,k0,k1,k0_rank,k1_rank,starred,support_k0,support_k1,match\n";
    for (const auto& r : rows)
      out << '"' << r.e.twisting.to_string() << "\"," << r.e.k0 << ",\"" << r.e.k1 << "\"," << r.e.k0_rank << ','
          << r.e.k1_rank << ',' << r.e.starred << ',' << r.lines0 << ',' << r.lines1 << ',' << r.match() << '\n';
  } else {
    out << std::left << std::setw(12) << "twisting" << std::setw(4) << "K0" << std::setw(20) << "K1" << std::setw(10)
        << "ranks" << std::setw(10) << "support" << "\n";
    for (const auto& r : rows) {
      const std::string ranks = std::to_string(r.e.k0_rank) + "/" + std::to_string(r.e.k1_rank);
      const std::string lines = std::to_string(r.lines0) + "/" + std::to_string(r.lines1);
      out << std::left << std::setw(12) << r.e.twisting.to_string() + (r.e.starred ? "*" : "") << std::setw(4)
          << r.e.k0 << std::setw(20) << r.e.k1 << std::setw(10) << ranks << std::setw(10) << lines
          << (r.match() ? "" : "MISMATCH") << '\n';
    }
  }
  return ok ? kOk : kRefused;
}

struct SmallRing {
  std::string title;
  std::vector<std::string> labels;
  std::vector<std::vector<std::vector<std::int64_t>>> mult;
};

SmallRing so3_ring(const JobConfig& c) {
  so3::TwistingType t;
  if (c.twisting) {
    t = *c.twisting;
  } else {
    t.k = k_of(c);
    t.eps1 = t.k % 2 == 0 ? 1 : -1;
    t.eps2 = -1;
  }
  if (t.k > 2001) throw ComputationRefused("--k above 2001 is refused for so3-fusion");
  const bool odd = t.k % 2 != 0;
  if (t.eps2 != -1 || t.eps1 != (odd ? -1 : 1))
    throw InvalidInput("twisting " + t.to_string() + " carries no Verlinde ring; use (+,-,even) or (-,-,odd)");
  SmallRing r;
  r.title = "Verlinde ring of SO(3) at twisting " + t.to_string();
  if (odd) {
    if (t.k < 3) throw InvalidInput("the graded ring needs k >= 3");
    const auto g = so3::graded_ring(t.k);
    r.labels = g.labels;
    r.mult = g.mult;
    return r;
  }
  const auto q = so3::rk_ring(-1, 1, t.k);
  for (auto p : q.basis()) r.labels.push_back("[" + std::to_string(p) + "]");
  const std::size_t n = q.rank();
  r.mult.assign(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [label, coeff] : q.mult()[a][b]) r.mult[a][b][static_cast<std::size_t>((label - 1) / 2)] = coeff;
  return r;
}

int cmd_so3_fusion(const JobConfig& c, std::ostream& out) {
  const SmallRing r = so3_ring(c);
  const std::size_t n = r.labels.size();
  if (c.format == Format::Json) {
    json constants = json::array();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < n; ++k)
          if (r.mult[a][b][k] != 0) constants.push_back({a, b, k, r.mult[a][b][k]});
    print_json(out, json{{"title", r.title}, {"basis", r.labels}, {"constants", constants}});
    return kOk;
  }
  if (c.format == Format::Csv) {
    out << "a,b,c,N\n";
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < n; ++k)
          if (r.mult[a][b][k] != 0) out << a << ',' << b << ',' << k << ',' << r.mult[a][b][k] << '\n';
    return kOk;
  }
  out << r.title << '\n';
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      out << r.labels[a] << " x " << r.labels[b] << " =";
      bool first = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (r.mult[a][b][k] == 0) continue;
        out << (first ? " " : " + ") << term(Integer(static_cast<long>(r.mult[a][b][k])), r.labels[k]);
        first = false;
      }
      if (first) out << " 0";
      out << '\n';
    }
  return kOk;
}

koszul::IntMatrix parse_beta(const std::string& text) {
  koszul::IntMatrix m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<std::int64_t> r;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoll(cell, &used));
        while (used < cell.size() && cell[used] == ' ') ++used;
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::logic_error&) {
        throw InvalidInput("--beta entries must be integers, got '" + cell + "'");
      }
    }
    m.push_back(r);
  }
  if (m.empty()) throw InvalidInput("--beta is empty");
  for (const auto& r : m)
    if (r.size() != m.size()) throw InvalidInput("--beta must be square, rows separated by ';'");
  return m;
}

json page_json(const std::map<int, std::size_t>& page) {
  json j = json::object();
  for (const auto& [p, d] : page) j[std::to_string(p)] = d;
  return j;
}

std::string page_text(const std::map<int, std::size_t>& page) {
  std::string s;
  for (const auto& [p, d] : page) s += (s.empty() ? "" : " ") + std::to_string(p) + ":" + std::to_string(d);
  return s;
}

int cmd_koszul(const JobConfig& c, std::ostream& out) {
  koszul::IntMatrix beta;
  if (!c.beta.empty()) {
    beta = parse_beta(c.beta);
  } else if (c.k) {
    if (*c.k < 1) throw InvalidInput("--k must be positive");
    beta = {{2 * *c.k}};
  } else {
    throw InvalidInput("koszul needs --beta (e.g. --beta '2,0;0,2') or --k");
  }
  const int n = static_cast<int>(beta.size());
  if (n > 4) throw ComputationRefused("koszul is limited to rank 4");
  const int d = c.truncation.value_or(n + 4);
  if (d > 30) throw ComputationRefused("--truncation above 30 is refused");
  const auto dims = koszul::twisted_cohomology_dims(beta, d);
  const auto report = koszul::spectral_sequence_trace(beta, d);
  const bool d2 = koszul::differential_squares_to_zero(koszul::KoszulComplex(beta, d));
  std::optional<std::size_t> stalk;
  if (c.k && c.beta.empty()) stalk = koszul::su2_invariant_stalk(*c.k, d);

  if (c.format == Format::Json) {
    json doc{{"beta", beta},
             {"truncation", d},
             {"even", dims.even},
             {"odd", dims.odd},
             {"stable", dims.stable},
             {"d_squared_zero", d2},
             {"e2", page_json(report.e2)},
             {"e3", page_json(report.e3)},
             {"e4", page_json(report.e4)},
             {"delta2_zero", report.delta2_zero},
             {"e_infinity", {{"even", report.e_infinity.even}, {"odd", report.e_infinity.odd}}},
             {"degenerates_at_e4", report.degenerates_at_e4}};
    if (stalk) doc["invariant_stalk"] = *stalk;
    print_json(out, doc);
  } else if (c.format == Format::Csv) {
    out << "page,degree,dimension\n";
    const std::pair<const char*, const std::map<int, std::size_t>*> pages[] = {
        {"E2", &report.e2}, {"E3", &report.e3}, {"E4", &report.e4}};
    for (const auto& [name, page] : pages)
      for (const auto& [p, dim] : *page) out << name << ',' << p << ',' << dim << '\n';
  } else {
    out << "rank " << n << ", truncation " << d << '\n';
    out << "H even " << dims.even << ", H odd " << dims.odd << (dims.stable ? ", stable" : ", NOT stable") << '\n';
    out << "d^2 = 0: " << (d2 ? "yes" : "no") << ", delta_2 = 0: " << (report.delta2_zero ? "yes" : "no") << '\n';
    out << "E2 " << page_text(report.e2) << '\n';
    out << "E4 " << page_text(report.e4) << '\n';
    out << "E4 total even " << report.e4_total.even << " odd " << report.e4_total.odd << "; direct even "
        << report.e_infinity.even << " odd " << report.e_infinity.odd
        << (report.degenerates_at_e4 ? " (degenerates at E4)" : " (no degeneration at E4)") << '\n';
    if (stalk) out << "Weyl-invariant stalk: " << *stalk << '\n';
  }
  return d2 ? kOk : kRefused;
}

int cmd_verify(const JobConfig& c, std::ostream& out) {
  const LevelData ld = level_data(c, 60);
  const std::int64_t g = c.genus ? genus_of(c) : 3;
  if (g > 20) throw ComputationRefused("verify runs every genus up to --genus; keep it <= 20");
  const auto checks = verify::run_oracles(ld, g);
  if (c.format == Format::Json)
    print_json(out, json{{"group", ld.rs.name()}, {"level", ld.h}, {"checks", checks_json(checks)}});
  else
    print_checks(out, checks, c.format);
  return all_pass(checks) ? kOk : kRefused;
}

}  // namespace

int run(const JobConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "fusion-table") return cmd_fusion_table(c, out, err);
    if (c.command == "verlinde-dim") return cmd_verlinde_dim(c, out);
    if (c.command == "characters") return cmd_characters(c, out);
    if (c.command == "regular-points") return cmd_regular_points(c, out);
    if (c.command == "so3-table") return cmd_so3_table(c, out);
    if (c.command == "so3-fusion") return cmd_so3_fusion(c, out);
    if (c.command == "koszul") return cmd_koszul(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    throw InvalidInput("unknown command '" + c.command + "'");
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ComputationRefused& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kRefused;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Verlinde rings, twisted K-theory checks and SO(3) tables"};
  JobConfig c;
  std::int64_t level = 0, genus = 0, k = 0;
  int truncation = 0;
  std::string twisting, format = "text", cache_dir;
  app.add_option("command", c.command, "fusion-table | verlinde-dim | characters | regular-points | so3-table | so3-fusion | koszul | verify")
      ->required()
      ->check(CLI::IsMember({"fusion-table", "verlinde-dim", "characters", "regular-points", "so3-table",
                             "so3-fusion", "koszul", "verify"}));
  app.add_option("--group", c.group, "Dynkin type such as A1, B2, C3, D4");
  auto* level_opt = app.add_option("--level", level, "level h >= 0");
  auto* genus_opt = app.add_option("--genus", genus, "genus g >= 1");
  auto* k_opt = app.add_option("--k", k, "SO(3) twisting level, or Koszul beta = [2k]");
  app.add_option("--twisting", twisting, "SO(3) twisting such as +,-,3");
  app.add_option("--beta", c.beta, "Koszul bilinear form, rows separated by ';'");
  auto* trunc_opt = app.add_option("--truncation", truncation, "Koszul symmetric-degree truncation");
  app.add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", cache_dir, "fusion-table cache directory (VERLINDE_CACHE_DIR overrides)");
  app.add_flag("--verify", c.verify, "run every applicable oracle after the command");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  if (*level_opt) c.level = level;
  if (*genus_opt) c.genus = genus;
  if (*k_opt) c.k = k;
  if (*trunc_opt) c.truncation = truncation;
  c.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  c.cache_dir = cache_dir;
  if (!twisting.empty()) {
    try {
      c.twisting = so3::parse_twisting(twisting);
    } catch (const InvalidInput& e) {
      err << "error: " << e.what() << '\n';
      return kInvalid;
    }
  }
  return run(c, out, err);
}

}  // namespace verlinde::cli
