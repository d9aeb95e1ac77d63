#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "partid/partid.hpp"

namespace partid::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct BadPartition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<unsigned> parse_unsigned(std::string_view s) {
  unsigned v = 0;
  auto const* first = s.data();
  auto const* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || s.empty()) return std::nullopt;
  return v;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string const& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

/// Comma-separated positive parts. Unsorted input is sorted with a warning.
PartList parse_parts(std::string const& s, std::ostream& err) {
  std::vector<Part> parts;
  if (!trim(s).empty()) {
    for (auto const& tok : split(s, ',')) {
      auto v = parse_unsigned(tok);
      if (!v) throw BadPartition("malformed part '" + tok + "'");
      if (*v == 0) throw BadPartition("parts must be positive");
      parts.push_back(*v);
    }
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    err << "warning: parts were not in nonincreasing order; sorted\n";
  }
  return PartList::sorted(std::move(parts));
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
}

ordered_json value_json(Value const& v) {
  return std::visit(
      [](auto const& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::complex<double>>) {
          return ordered_json::array({x.real(), x.imag()});
        } else if constexpr (std::is_same_v<T, LinearForm>) {
          ordered_json o = ordered_json::object();
          for (auto const& [j, c] : x.coefficients()) o["x_" + std::to_string(j)] = c.str();
          return o;
        } else {
          return partid::to_string(x);
        }
      },
      v);
}

std::string value_text(Value const& v) {
  if (auto const* z = std::get_if<std::complex<double>>(&v)) return format_complex(*z);
  return partid::to_string(v);
}

std::string point_text(std::vector<Rational> const& pt) {
  std::string s;
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) s += ';';
    s += partid::to_string(pt[i]);
  }
  return s;
}

ordered_json report_json(IdentityReport const& r, bool timing) {
  ordered_json j;
  j["identity"] = std::string(tag(r.identity));
  j["n"] = r.n;
  j["m"] = r.m;
  if (r.k) j["k"] = *r.k;
  if (r.sign) j["sign"] = *r.sign;
  if (r.z) j["z"] = ordered_json::array({r.z->real(), r.z->imag()});
  if (r.point) {
    auto a = ordered_json::array();
    for (auto const& q : *r.point) a.push_back(partid::to_string(q));
    j["point"] = std::move(a);
  }
  if (r.seed) j["seed"] = *r.seed;
  j["lhs"] = value_json(r.lhs);
  j["rhs"] = value_json(r.rhs);
  j["verdict"] = r.pass ? "pass" : "fail";
  j["residual"] = r.residual;
  j["elapsed_us"] = timing ? r.elapsed_us : 0;
  return j;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::vector<std::string> report_row(IdentityReport const& r, bool timing) {
  return {std::string(tag(r.identity)),
          std::to_string(r.n),
          std::to_string(r.m),
          r.k ? std::to_string(*r.k) : "",
          r.sign ? (*r.sign > 0 ? "+1" : "-1") : "",
          r.z ? format_complex(*r.z) : "",
          r.point ? point_text(*r.point) : "",
          r.seed ? std::to_string(*r.seed) : "",
          value_text(r.lhs),
          value_text(r.rhs),
          r.pass ? "pass" : "fail",
          format_double(r.residual),
          std::to_string(timing ? r.elapsed_us : 0)};
}

std::vector<std::string> const csv_header = {"identity", "n",   "m",   "k",       "sign",     "z",         "point",
                                             "seed",     "lhs", "rhs", "verdict", "residual", "elapsed_us"};

std::string_view describe(IdentityId id) {
  switch (id) {
    case IdentityId::per_k: return "sum t_{km} = sum floor(t_k/m)";
    case IdentityId::per_k_first: return "sum t_{km} = sum floor(t_1/km)";
    case IdentityId::per_k_signed: return "sum (-1)^{t_m+t_2m+..} t_{km} = sum (-1)^{sum floor(t_i/m)} floor(t_k/m)";
    case IdentityId::power_multiplicity: return "sum_k s_k k^z t_{km} = sum_k s_k k^z floor(t_k/m)";
    case IdentityId::power_first: return "sum_k s_k k^z t_{km} = sum_k s_k k^z floor(t_1/km)";
    case IdentityId::power_signed: return "signed sum_k s_k k^z t_{km} = signed sum_k s_k k^z floor(t_k/m)";
    case IdentityId::weighted_multiplicity: return "sum sign^{alpha} beta = sum sign^{alpha'} beta'";
    case IdentityId::residual_weight: return "sum sign^{alpha} gamma = sum sign^{alpha'} gamma'";
    case IdentityId::equidist_eval: return "joint (alpha_k, gamma) polynomial = joint (alpha'_k, gamma') polynomial";
    case IdentityId::equidist_transport: return "alpha_k, gamma of lambda = alpha'_k, gamma' of sigma_m(lambda)";
    case IdentityId::trivariate_eval: return "sum x^alpha y^beta z^gamma = sum x^alpha' y^beta' z^gamma'";
    case IdentityId::derivative_y: return "d/dy at (sign,1,1)";
    case IdentityId::derivative_z: return "d/dz at (sign,1,1)";
    case IdentityId::decorated_weights: return "sum W = sum W~ over decorated partitions";
    case IdentityId::restricted_refinement: return "restricted multiplicity form = restricted floor form";
    case IdentityId::convolution_multiplicity: return "P_n multiplicity form = p_m convolution";
    case IdentityId::convolution_floor: return "P_n floor form = p_m convolution";
  }
  return "";
}

/// Aligned table, one block per identity.
void write_text(std::ostream& out, std::vector<IdentityReport> const& reports, bool timing) {
  std::size_t i = 0;
  while (i < reports.size()) {
    auto const id = reports[i].identity;
    std::size_t j = i;
    while (j < reports.size() && reports[j].identity == id) ++j;
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "m", "k", "sign", "z", "lhs", "rhs", "verdict"});
    for (std::size_t r = i; r < j; ++r) {
      auto row = report_row(reports[r], timing);
      rows.push_back({row[1], row[2], row[3], row[4], row[5], row[8], row[9], row[10]});
    }
    // Columns that are empty in every data row are dropped.
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (std::size_t r = 1; r < rows.size(); ++r)
      for (std::size_t c = 0; c < width.size(); ++c) width[c] = std::max(width[c], rows[r][c].size());
    for (std::size_t c = 0; c < width.size(); ++c)
      if (width[c] != 0) width[c] = std::max(width[c], rows.front()[c].size());
    out << "# " << tag(id) << ": " << describe(id) << '\n';
    for (auto const& row : rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (width[c] == 0) continue;
        if (c != 0) line += "  ";
        line += row[c];
        if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
    out << '\n';
    i = j;
  }
}

using Task = std::function<IdentityReport()>;

std::vector<Task> build_tasks(RunConfig const& cfg) {
  std::vector<IdentityId> ids = cfg.identities;
  if (ids.empty()) {
    if (cfg.command == Command::table) {
      ids = {IdentityId::weighted_multiplicity};
    } else {
      ids.assign(all_identities.begin(), all_identities.end());
    }
  }
  std::vector<Task> tasks;
  for (auto id : ids) {
    for (unsigned n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n) {
      if (id == IdentityId::decorated_weights) {
        if (n >= 1) tasks.push_back([n] { return check_e3(n); });
        continue;
      }
      for (unsigned m = std::max(cfg.m_range.lo, 1u); m <= cfg.m_range.hi; ++m) {
        switch (id) {
          case IdentityId::per_k:
          case IdentityId::per_k_first:
          case IdentityId::per_k_signed:
            for (std::uint64_t k = 1; k <= (n + m - 1) / m; ++k) {
              tasks.push_back([id, n, m, k] {
                if (id == IdentityId::per_k) return check_per_k(n, m, k);
                if (id == IdentityId::per_k_first) return check_per_k_first(n, m, k);
                return check_per_k_signed(n, m, k);
              });
            }
            break;
          case IdentityId::power_multiplicity:
          case IdentityId::power_first:
          case IdentityId::power_signed: {
            auto const variant = id == IdentityId::power_multiplicity ? PowerVariant::multiplicity
                                 : id == IdentityId::power_first      ? PowerVariant::first
                                                                      : PowerVariant::signed_;
            for (int sign : cfg.signs) {
              for (unsigned z = 0; z <= 3; ++z) {
                tasks.push_back([=] { return check_merca_exact(n, m, z, sign, variant); });
              }
              auto rng = sample_stream(cfg.seed, n, m);
              for (unsigned s = 0; s < cfg.z_samples; ++s) {
                auto const z = sample_complex(rng, 2.0);
                auto const seed = cfg.seed;
                tasks.push_back([=] {
                  auto r = check_merca(n, m, z, sign, variant);
                  r.seed = seed;
                  return r;
                });
              }
            }
            break;
          }
          case IdentityId::weighted_multiplicity:
          case IdentityId::residual_weight: {
            auto const variant =
                id == IdentityId::weighted_multiplicity ? WeightVariant::multiplicity : WeightVariant::residual;
            for (int sign : cfg.signs) tasks.push_back([=] { return check_am_general(n, m, sign, variant); });
            break;
          }
          case IdentityId::derivative_y:
          case IdentityId::derivative_z: {
            auto const var = id == IdentityId::derivative_y ? DerivativeVariable::y : DerivativeVariable::z;
            for (int sign : cfg.signs) tasks.push_back([=] { return check_dnew_derivative(n, m, sign, var); });
            break;
          }
          case IdentityId::equidist_eval: {
            auto rng = sample_stream(cfg.seed, n, m);
            for (unsigned s = 0; s < cfg.points; ++s) {
              auto xs = sample_rational_point(rng, n);
              auto z = small_rational(rng);
              auto const seed = cfg.seed;
              tasks.push_back([=] { return check_bnew1_eval(n, m, xs, z, seed); });
            }
            break;
          }
          case IdentityId::trivariate_eval: {
            auto rng = sample_stream(cfg.seed, n, m);
            for (unsigned s = 0; s < cfg.points; ++s) {
              auto pt = sample_rational_point(rng, 3);
              auto const seed = cfg.seed;
              tasks.push_back([=] { return check_dnew1_eval(n, m, pt[0], pt[1], pt[2], seed); });
            }
            break;
          }
          case IdentityId::equidist_transport:
            if (m >= 2) tasks.push_back([=] { return check_bnew1_transport(n, m); });
            break;
          case IdentityId::restricted_refinement:
            if (m >= 2) tasks.push_back([=] { return check_e2(n, m); });
            break;
          case IdentityId::convolution_multiplicity:
            if (m >= 2) tasks.push_back([=] { return check_convolution(n, m, ConvolutionSide::multiplicity); });
            break;
          case IdentityId::convolution_floor:
            if (m >= 2) tasks.push_back([=] { return check_convolution(n, m, ConvolutionSide::floor); });
            break;
          case IdentityId::decorated_weights:
            break;
        }
      }
    }
  }
  return tasks;
}

/// Runs tasks on `workers` threads and hands results to `sink` in task order.
void execute(std::vector<Task> const& tasks, unsigned workers, std::function<void(IdentityReport const&)> const& sink) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
  std::vector<std::optional<IdentityReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      auto const i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      std::optional<IdentityReport> r;
      std::exception_ptr e;
      try {
        r = tasks[i]();
      } catch (...) {
        e = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        results[i] = std::move(r);
        errors[i] = e;
        if (!results[i]) results[i].emplace();  // marks slot done
      }
      cv.notify_all();
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  if (workers == 1) worker();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return results[i].has_value(); });
    if (errors[i]) std::rethrow_exception(errors[i]);
    auto r = std::move(*results[i]);
    lock.unlock();
    sink(r);
  }
}

int run_reports(RunConfig const& cfg, std::ostream& out) {
  auto const tasks = build_tasks(cfg);
  bool all_pass = true;
  std::vector<IdentityReport> collected;
  bool header_written = false;
  execute(tasks, cfg.workers, [&](IdentityReport const& r) {
    all_pass = all_pass && r.pass;
    switch (cfg.format) {
      case Format::json: out << report_json(r, cfg.timing).dump() << '\n'; break;
      case Format::csv: {
        if (!header_written) {
          for (std::size_t c = 0; c < csv_header.size(); ++c) out << (c ? "," : "") << csv_header[c];
          out << '\n';
          header_written = true;
        }
        auto const row = report_row(r, cfg.timing);
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
        out << '\n';
        break;
      }
      case Format::text: collected.push_back(r); break;
    }
  });
  if (cfg.format == Format::text) {
    write_text(out, collected, cfg.timing);
    std::size_t failed = std::count_if(collected.begin(), collected.end(), [](auto const& r) { return !r.pass; });
    out << collected.size() << " checks, " << failed << " failed\n";
  }
  return all_pass ? exit_pass : exit_failure;
}

int run_enumerate(RunConfig const& cfg, std::ostream& out) {
  if (cfg.format == Format::csv) out << (cfg.decorated && cfg.weights ? "n,parts,W,Wtilde\n" : "n,parts\n");
  for (unsigned n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n) {
    if (!cfg.decorated) {
      for_each_partition(n, [&](Partition const& p) {
        auto const s = to_string(p);
        switch (cfg.format) {
          case Format::json: out << ordered_json{{"n", n}, {"parts", s}}.dump() << '\n'; break;
          case Format::csv: out << n << ',' << csv_field(s) << '\n'; break;
          case Format::text: out << s << '\n'; break;
        }
      });
      continue;
    }
    if (n == 0) continue;
    for_each_decorated(n, [&](DecoratedPartition const& d) {
      auto const s = to_string(d);
      auto const w = to_string(weight_W(d));
      auto const wt = to_string(weight_Wtilde(d));
      switch (cfg.format) {
        case Format::json: {
          ordered_json j{{"n", n}, {"parts", s}};
          if (cfg.weights) {
            j["W"] = w;
            j["Wtilde"] = wt;
          }
          out << j.dump() << '\n';
          break;
        }
        case Format::csv:
          out << n << ',' << csv_field(s);
          if (cfg.weights) out << ',' << csv_field(w) << ',' << csv_field(wt);
          out << '\n';
          break;
        case Format::text:
          out << s;
          if (cfg.weights) out << " W=" << w << " W~=" << wt;
          out << '\n';
          break;
      }
    });
  }
  return exit_pass;
}

int run_map(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
  unsigned const m = cfg.m_range.lo;
  if (cfg.m_range.hi != m || m < 2) {
    err << "error: map needs a single modulus m >= 2\n";
    return exit_usage;
  }
  auto const source = parse_parts(cfg.parts, err);
  auto const lambda = Partition::from_parts(source);
  auto const image = (cfg.inverse ? sigma_inv(lambda, m) : sigma(lambda, m)).to_parts();
  auto const oe = decompose_oe(cfg.inverse ? image : source, m);
  auto const dn = decompose_dn(cfg.inverse ? source : image, m);

  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("source", to_string(source));
  auto const oe_fields = {std::pair{std::string("o-part"), to_string(oe.o_part)},
                          std::pair{std::string("e-part"), to_string(oe.e_part)}};
  auto const dn_fields = {std::pair{std::string("d-part"), to_string(dn.d_part)},
                          std::pair{std::string("n-part"), to_string(dn.n_part)}};
  if (cfg.inverse) {
    fields.insert(fields.end(), dn_fields);
    fields.insert(fields.end(), oe_fields);
  } else {
    fields.insert(fields.end(), oe_fields);
    fields.insert(fields.end(), dn_fields);
  }
  fields.emplace_back("image", to_string(image));

  switch (cfg.format) {
    case Format::json: {
      ordered_json j{{"m", m}, {"direction", cfg.inverse ? "inverse" : "forward"}};
      for (auto const& [k, v] : fields) j[k] = v;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "m,direction";
      for (auto const& f : fields) out << ',' << f.first;
      out << '\n' << m << ',' << (cfg.inverse ? "inverse" : "forward");
      for (auto const& f : fields) out << ',' << csv_field(f.second);
      out << '\n';
      break;
    case Format::text:
      for (auto const& [k, v] : fields) out << k << ": " << v << '\n';
      break;
  }
  return exit_pass;
}

unsigned default_workers() {
  if (char const* env = std::getenv("PARTID_WORKERS")) {
    if (auto v = parse_unsigned(env); v && *v > 0) return *v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::optional<Range> parse_range(std::string const& s) {
  auto const pos = s.find("..");
  if (pos == std::string::npos) {
    auto v = parse_unsigned(trim(s));
    if (!v) return std::nullopt;
    return Range{*v, *v};
  }
  auto lo = parse_unsigned(trim(s.substr(0, pos)));
  auto hi = parse_unsigned(trim(s.substr(pos + 2)));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return Range{*lo, *hi};
}

std::vector<IdentityId> parse_identities(std::string const& s) {
  using I = IdentityId;
  std::vector<IdentityId> out;
  auto add = [&](std::vector<IdentityId> const& ids) {
    for (auto id : ids)
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (auto const& name : split(s, ',')) {
    if (name.empty()) continue;
    if (name == "all") {
      add(std::vector<IdentityId>(all_identities.begin(), all_identities.end()));
    } else if (name == "per-k-family") {
      add({I::per_k, I::per_k_first, I::per_k_signed});
    } else if (name == "power") {
      add({I::power_multiplicity, I::power_first, I::power_signed});
    } else if (name == "weighted") {
      add({I::weighted_multiplicity, I::residual_weight});
    } else if (name == "equidist") {
      add({I::equidist_eval, I::equidist_transport, I::trivariate_eval});
    } else if (name == "derivative") {
      add({I::derivative_y, I::derivative_z});
    } else if (name == "decorated") {
      add({I::decorated_weights, I::restricted_refinement, I::convolution_multiplicity, I::convolution_floor});
    } else if (auto id = parse_identity(name)) {
      add({*id});
    } else {
      throw std::invalid_argument("unknown identity '" + name + "'");
    }
  }
  // Canonical order keeps output independent of how the list was spelled.
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IdentityReport> run_checks(RunConfig const& config) {
  std::vector<IdentityReport> out;
  execute(build_tasks(config), config.workers, [&](IdentityReport const& r) { out.push_back(r); });
  return out;
}

int run(RunConfig const& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output_path) {
    file.open(*config.output_path, std::ios::out | std::ios::trunc);
    if (!file) {
      err << "error: cannot open '" << *config.output_path << "' for writing\n";
      return exit_io;
    }
    sink = &file;
  }
  int code = exit_pass;
  try {
    switch (config.command) {
      case Command::verify:
      case Command::table: code = run_reports(config, *sink); break;
      case Command::enumerate: code = run_enumerate(config, *sink); break;
      case Command::map: code = run_map(config, *sink, err); break;
    }
  } catch (BadPartition const& e) {
    err << "error: " << e.what() << '\n';
    return exit_bad_partition;
  }
  sink->flush();
  if (!*sink) {
    err << "error: write failed\n";
    return exit_io;
  }
  return code;
}

int main(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brute-force verification of partition identities around the sigma_m bijection"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.workers = default_workers();
  std::string n_text, m_text, identities_text, format_text, signs_text, output_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output,-o", output_text, "write to this file instead of stdout");
  };
  auto add_checks = [&](CLI::App* sub) {
    sub->add_option("--n", n_text, "n range, a..b");
    sub->add_option("--m", m_text, "m range, a..b");
    sub->add_option("--identities", identities_text, "comma-separated identity tags or groups");
    sub->add_option("--signs", signs_text, "subset of +1,-1");
    sub->add_option("--z-samples", cfg.z_samples, "complex z draws per (n, m, sign)");
    sub->add_option("--points", cfg.points, "rational evaluation points per (n, m)");
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--workers", cfg.workers, "worker threads (default: $PARTID_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--timing", cfg.timing, "record elapsed_us (output is then not reproducible)");
    add_common(sub);
  };

  auto* verify = app.add_subcommand("verify", "run identity checkers over n and m ranges");
  add_checks(verify);
  auto* table = app.add_subcommand("table", "print both sides of the selected identities");
  add_checks(table);
  auto* enumerate = app.add_subcommand("enumerate", "list the partitions of n");
  enumerate->add_option("--n", n_text, "n or n range")->required();
  enumerate->add_flag("--decorated", cfg.decorated, "list decorated partitions instead");
  enumerate->add_flag("--weights", cfg.weights, "with --decorated, also print W and W~");
  add_common(enumerate);
  auto* map = app.add_subcommand("map", "apply sigma_m or its inverse to one partition");
  map->add_option("--m", m_text, "modulus m >= 2")->required();
  map->add_option("--parts", cfg.parts, "comma-separated parts, e.g. 6,3,3,1")->required();
  map->add_flag("--inverse", cfg.inverse, "apply the inverse map");
  add_common(map);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e, out, err);
    return rc == 0 ? exit_pass : exit_usage;
  }

  if (verify->parsed()) cfg.command = Command::verify;
  if (table->parsed()) cfg.command = Command::table;
  if (enumerate->parsed()) cfg.command = Command::enumerate;
  if (map->parsed()) cfg.command = Command::map;

  if (!output_text.empty()) cfg.output_path = output_text;
  if (format_text.empty()) {
    cfg.format = (cfg.command == Command::verify) ? Format::json : Format::text;
  } else {
    cfg.format = format_text == "json" ? Format::json : format_text == "csv" ? Format::csv : Format::text;
  }
  if (!n_text.empty()) {
    auto r = parse_range(n_text);
    if (!r) {
      err << "error: bad --n range '" << n_text << "'\n";
      return exit_usage;
    }
    cfg.n_range = *r;
  }
  if (!m_text.empty()) {
    auto r = parse_range(m_text);
    if (!r || r->lo == 0) {
      err << "error: bad --m range '" << m_text << "'\n";
      return exit_usage;
    }
    cfg.m_range = *r;
  }
  if (!identities_text.empty()) {
    try {
      cfg.identities = parse_identities(identities_text);
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
  }
  if (!signs_text.empty()) {
    cfg.signs.clear();
    for (auto const& s : split(signs_text, ',')) {
      if (s == "+1" || s == "1" || s == "+") {
        cfg.signs.push_back(1);
      } else if (s == "-1" || s == "-") {
        cfg.signs.push_back(-1);
      } else {
        err << "error: bad sign '" << s << "'\n";
        return exit_usage;
      }
    }
  }
  return run(cfg, out, err);
}

}  // namespace partid::cli
