#include "cyclequiv/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "cyclequiv/partition.hpp"

namespace cyclequiv {

using nlohmann::json;

std::vector<ManifestEntry> read_manifest(std::istream& in) {
  std::vector<ManifestEntry> out;
  std::set<std::string> labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    ManifestEntry e;
    if (!(ls >> e.label)) continue;
    std::string level;
    auto fail = [&](const std::string& why) {
      return std::runtime_error("manifest line " + std::to_string(lineno) + ": " + why);
    };
    if (!(ls >> e.q >> e.n >> e.k >> e.d >> level >> e.chain))
      throw fail("expected 'label q n k d level construction polynomials...'");
    if (level == "exact")
      e.level = ManifestEntry::Level::exact;
    else if (level == "upper")
      e.level = ManifestEntry::Level::upper;
    else
      throw fail("level must be 'exact' or 'upper', got '" + level + "'");
    for (std::string p; ls >> p;) e.polys.push_back(p);
    if (e.polys.empty()) throw fail("no polynomials");
    if (!labels.insert(e.label).second) throw fail("duplicate label '" + e.label + "'");
    e.line = lineno;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ManifestEntry> read_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest '" + path + "'");
  return read_manifest(in);
}

VerifyResult verify_entry(const ManifestEntry& e, const VerifyOptions& opts) {
  VerifyResult r;
  r.entry = e;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const FieldPtr field = Field::of_size(e.q);
    const Construction c = parse_construction(field, e.chain, e.polys);
    const GeneratorMatrix m = c.build();
    r.n = m.n();
    r.k = m.k();
    if (r.n != e.n || r.k != e.k) {
      r.detail = "parameters [" + std::to_string(r.n) + "," + std::to_string(r.k) + "] differ from the expected [" +
                 std::to_string(e.n) + "," + std::to_string(e.k) + "]";
    } else if (e.level == ManifestEntry::Level::exact) {
      DistanceOptions d;
      d.budget = opts.budget;
      d.threads = opts.threads;
      r.cert = min_distance(m, d);
      r.witness_checked = witness_valid(m, r.cert);
      r.pass = r.cert.exact() && r.cert.upper == e.d && r.witness_checked;
      if (!r.cert.exact())
        r.detail = "only " + std::to_string(r.cert.lower) + " <= d <= " + std::to_string(r.cert.upper) +
                   " within the budget";
      else if (r.cert.upper != e.d)
        r.detail = "d = " + std::to_string(r.cert.upper);
    } else {
      UpperBoundOptions u;
      u.target = e.d;
      u.iterations = opts.iterations;
      u.seed = opts.seed;
      r.cert = upper_bound_search(m, u);
      r.witness_checked = witness_valid(m, r.cert);
      r.pass = r.cert.upper <= e.d && r.witness_checked;
      if (!r.pass) r.detail = "lightest codeword found has weight " + std::to_string(r.cert.upper);
    }
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

std::string params(std::size_t n, std::size_t k, std::uint32_t q) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "]_" + std::to_string(q);
}

std::string cert_text(const DistanceCertificate& c) {
  if (c.exact()) return "d=" + std::to_string(c.upper) + " exact";
  return std::to_string(c.lower) + "<=d<=" + std::to_string(c.upper);
}

json cert_json(const DistanceCertificate& c) {
  json j{{"lower", c.lower},
         {"upper", c.upper},
         {"exact", c.exact()},
         {"method", to_string(c.method)},
         {"codewords_examined", c.codewords_examined},
         {"budget_exhausted", c.budget_exhausted}};
  std::vector<std::uint32_t> w;
  for (auto x : c.witness) w.push_back(x.v);
  j["witness"] = w;
  return j;
}

json record_json(const CodeRecord& r) {
  json j{{"q", r.q},
         {"n", r.n},
         {"k", r.k},
         {"certificate", cert_json(r.cert)},
         {"construction", r.construction.chain()},
         {"status", to_string(r.status)}};
  std::vector<std::string> polys;
  for (const auto& p : r.construction.polys) polys.push_back(format_poly(p));
  j["polynomials"] = polys;
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["bklc"] = r.bklc ? json(*r.bklc) : json(nullptr);
  return j;
}

std::string default_data_path(const std::string& name) {
#ifdef CYCLEQUIV_DATA_DIR
  return std::string(CYCLEQUIV_DATA_DIR) + "/" + name;
#else
  return "data/" + name;
#endif
}

struct Common {
  std::string format = "text";
  bool quiet = false;
  unsigned threads = 0;

  void add(CLI::App* app) {
    app->add_option("--format", format, "Report encoding")->check(CLI::IsMember({"text", "json"}));
    app->add_flag("--quiet", quiet, "Suppress progress lines on standard error");
    app->add_option("--threads", threads, "Worker threads (default: CYCLEQUIV_THREADS or all cores)");
  }
  bool json_out() const { return format == "json"; }
};

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << content;
  if (!f) throw std::runtime_error("error writing '" + path + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalence, partition and search tools for cyclic and quasi-cyclic codes", "cyclequiv"};
  app.require_subcommand(1);

  // cosets
  auto* cosets = app.add_subcommand("cosets", "Cyclotomic cosets of length n over GF(q) and their polynomials");
  std::uint32_t c_q = 2;
  std::size_t c_n = 1;
  Common c_common;
  cosets->add_option("--q", c_q, "Field size p^m")->required();
  cosets->add_option("--n", c_n, "Code length")->required();
  c_common.add(cosets);

  // equiv
  auto* equiv = app.add_subcommand("equiv", "Affine equivalence test of two cyclic codes (exit 0/1/2)");
  std::uint32_t e_q = 2;
  std::size_t e_n = 1;
  std::string e_a, e_b, e_mode = "strict";
  bool e_brute = false;
  std::uint64_t e_cap = 100'000'000;
  Common e_common;
  equiv->add_option("--q", e_q, "Field size p^m")->required();
  equiv->add_option("--n", e_n, "Code length")->required();
  equiv->add_option("--a", e_a, "First code: coset multiset or [polynomial]")->required();
  equiv->add_option("--b", e_b, "Second code: coset multiset or [polynomial]")->required();
  equiv->add_option("--mode", e_mode, "strict or literal")->check(CLI::IsMember({"strict", "literal"}));
  equiv->add_flag("--brute-force", e_brute, "Also run the exhaustive monomial search");
  equiv->add_option("--cap", e_cap, "Candidate cap for --brute-force");
  e_common.add(equiv);

  // partition
  auto* partition = app.add_subcommand("partition", "Partition all cyclic codes of length n into affine classes");
  std::uint32_t p_q = 2;
  std::size_t p_n = 1;
  std::string p_mode = "strict", p_out;
  std::uint64_t p_budget = std::uint64_t{1} << 24;
  Common p_common;
  partition->add_option("--q", p_q, "Field size p^m")->required();
  partition->add_option("--n", p_n, "Code length")->required();
  partition->add_option("--mode", p_mode, "strict or literal")->check(CLI::IsMember({"strict", "literal"}));
  partition->add_option("--out", p_out, "Write the partition record to this file");
  partition->add_option("--budget", p_budget, "Refuse when more multisets than this would be enumerated");
  p_common.add(partition);

  // mindist
  auto* mindist = app.add_subcommand("mindist", "Minimum distance of a cyclic or quasi-cyclic code");
  std::uint32_t m_q = 2;
  std::size_t m_n = 0;
  std::string m_gen, m_qc, m_f2, m_f3, m_steps;
  bool m_check = false, m_upper = false, m_show_witness = false;
  std::uint64_t m_budget = 0, m_iterations = 2000, m_seed = 1;
  std::size_t m_target = 0;
  Common m_common;
  mindist->add_option("--q", m_q, "Field size p^m")->required();
  mindist->add_option("--n", m_n, "Code length (for --qc: m * ell)");
  mindist->add_option("--gen", m_gen, "Generator: [polynomial] or coset multiset")->required();
  mindist->add_option("--qc", m_qc, "Quasi-cyclic block length and index, 'm,ell'");
  mindist->add_option("--f2", m_f2, "Second block multiplier");
  mindist->add_option("--f3", m_f3, "Third block multiplier");
  mindist->add_flag("--check", m_check, "Read --gen as the check polynomial h");
  mindist->add_option("--steps", m_steps, "Derivation steps, e.g. 'shorten@0>extend'");
  mindist->add_option("--budget", m_budget, "Codeword budget of the exact engine (0 = unlimited)");
  mindist->add_flag("--upper-only", m_upper, "Randomized upper bound only");
  mindist->add_option("--iterations", m_iterations, "Iterations for --upper-only");
  mindist->add_option("--seed", m_seed, "Seed for --upper-only");
  mindist->add_option("--target", m_target, "Stop --upper-only at this weight");
  mindist->add_flag("--witness", m_show_witness, "Print the witness codeword");
  m_common.add(mindist);

  // search
  auto* search = app.add_subcommand("search", "Quasi-cyclic (ASR) search or cyclic sweep over affine classes");
  std::uint32_t s_q = 2;
  std::size_t s_m = 0, s_ell = 3, s_kmin = 1, s_kmax = SIZE_MAX;
  std::uint64_t s_trials = 0, s_seed = 1, s_budget = 0;
  std::string s_bklc, s_force, s_out, s_mode = "strict";
  bool s_sweep = false, s_derive = false;
  Common s_common;
  search->add_option("--q", s_q, "Field size p^m")->required();
  search->add_option("--m", s_m, "Block length (cyclic length with --sweep)")->required();
  search->add_option("--ell", s_ell, "Index of the quasi-cyclic codes");
  search->add_option("--trials", s_trials, "Random multiplier tuples per class");
  search->add_option("--seed", s_seed, "Seed of the trial streams");
  search->add_option("--kmin", s_kmin, "Smallest dimension");
  search->add_option("--kmax", s_kmax, "Largest dimension");
  search->add_option("--budget", s_budget, "Codeword budget per distance computation (0 = unlimited)");
  search->add_option("--bklc", s_bklc, "Best-known table 'q n k d' (default: shipped snapshot)");
  search->add_option("--force", s_force, "File of forced constructions, one 'chain polys...' per line");
  search->add_option("--mode", s_mode, "strict or literal")->check(CLI::IsMember({"strict", "literal"}));
  search->add_flag("--sweep", s_sweep, "Cyclic sweep of length --m instead of the QC search");
  search->add_flag("--derive", s_derive, "Append shortened, punctured and extended neighbours of forced codes");
  search->add_option("--out", s_out, "Write the records to this file");
  s_common.add(search);

  // verify
  auto* verify = app.add_subcommand("verify", "Check every code of a manifest");
  std::string v_manifest = default_data_path("codes.manifest"), v_only;
  VerifyOptions v_opts;
  Common v_common;
  verify->add_option("--manifest", v_manifest, "Manifest file");
  verify->add_option("--only", v_only, "Verify just this label");
  verify->add_option("--budget", v_opts.budget, "Codeword budget per exact entry (0 = unlimited)");
  verify->add_option("--iterations", v_opts.iterations, "Randomized iterations per upper entry");
  verify->add_option("--seed", v_opts.seed, "Seed for upper entries");
  v_common.add(verify);

  if (argc <= 1) {
    out << app.help();
    return 64;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    // Report through CLI11, but keep one usage exit code.
    return app.exit(e, out, err) == 0 ? 0 : 64;
  }

  try {
    if (cosets->parsed()) {
      const auto table = CosetTable::make(Field::of_size(c_q), c_n);
      const auto& s = table->split();
      if (c_common.json_out()) {
        json j{{"q", c_q}, {"n", c_n}, {"n_q", s.n_q}, {"i", s.i}, {"repeat", s.repeat},
               {"extension_degree", table->root().t}};
        json list = json::array();
        for (std::size_t k = 0; k < table->count(); ++k)
          list.push_back({{"coset", table->coset(k)}, {"polynomial", format_poly(table->coset_poly(k))}});
        j["cosets"] = list;
        out << j.dump(2) << '\n';
      } else {
        out << "q=" << c_q << " n=" << c_n << " n_q=" << s.n_q << " i=" << s.i << " multiplicity=" << s.repeat
            << '\n';
        out << "alpha: primitive " << s.n_q << "-th root of unity in " << (table->root().extension ? table->root().extension->name()
                                                           : "GF(" + std::to_string(c_q) + "^" +
                                                                 std::to_string(table->root().t) + ")") << '\n';
        for (std::size_t k = 0; k < table->count(); ++k) {
          std::vector<unsigned> mult(table->count(), 0);
          mult[k] = 1;
          out << format_multiset(CosetMultiset(table, mult)) << '\t' << format_poly(table->coset_poly(k)) << '\t'
              << format_poly_algebraic(table->coset_poly(k)) << '\n';
        }
      }
      return 0;
    }

    if (equiv->parsed()) {
      const auto table = CosetTable::make(Field::of_size(e_q), e_n);
      const auto a = parse_generator(table, e_a);
      const auto b = parse_generator(table, e_b);
      const auto v = verdict(a, b, parse_mode(e_mode));
      std::optional<BruteForceOutcome> bf;
      if (e_brute) {
        const auto ga = circulant_matrix(coset_to_poly(a), e_n);
        const auto gb = circulant_matrix(coset_to_poly(b), e_n);
        if (ga.k() != gb.k()) {
          bf = BruteForceOutcome{BruteForceResult::not_equivalent, std::nullopt, 0};
        } else {
          bf = brute_force_equivalent(ga, gb, e_cap);
        }
      }
      if (e_common.json_out()) {
        json j{{"status", to_string(v.status)}, {"mode", to_string(v.mode)},
               {"a", format_multiset(a)}, {"b", format_multiset(b)}};
        j["witness"] = v.witness ? json{{"e", v.witness->e}, {"b", v.witness->b}} : json(nullptr);
        if (bf) {
          j["brute_force"] = {{"result", to_string(bf->result)}, {"candidates", bf->candidates}};
          if (bf->map) j["brute_force"]["perm"] = bf->map->perm;
        }
        out << j.dump(2) << '\n';
      } else {
        out << to_string(v.status);
        if (v.witness)
          out << " e=" << v.witness->e << " b=" << v.witness->b;
        else
          out << " none";
        out << '\n';
        if (bf) {
          out << "brute-force: " << to_string(bf->result) << " (" << bf->candidates << " candidates)\n";
          if (bf->map) {
            const auto mat = to_matrix(*bf->map, Field::of_size(e_q));
            for (std::size_t r = 0; r < mat.rows(); ++r) {
              for (std::size_t c = 0; c < mat.cols(); ++c) out << (c ? " " : "") << mat.at(r, c).v;
              out << '\n';
            }
          }
        }
      }
      switch (v.status) {
        case EquivStatus::equivalent: return 0;
        case EquivStatus::unknown: return 1;
        case EquivStatus::inequivalent: return 2;
      }
      return 1;
    }

    if (partition->parsed()) {
      PartitionOptions opts;
      opts.mode = parse_mode(p_mode);
      opts.budget = p_budget;
      if (!p_common.quiet)
        opts.progress = [&](std::uint64_t done, std::uint64_t total) {
          err << "[partition] " << done << "/" << total << '\n';
        };
      const auto rec = partition_cyclic(Field::of_size(p_q), p_n, opts);
      std::ostringstream text;
      write_partition(text, rec);
      if (!p_out.empty()) write_text_file(p_out, text.str());
      if (p_common.json_out()) {
        json j{{"q", p_q}, {"n", p_n}, {"mode", p_mode}, {"total", rec.total_enumerated},
               {"classes", rec.representatives.size()}, {"comparisons", rec.comparisons}};
        json reps = json::array();
        for (std::size_t r = 0; r < rec.representatives.size(); ++r)
          reps.push_back({{"multiset", format_multiset(rec.representatives[r])},
                          {"class_size", rec.class_sizes[r]},
                          {"generator", format_poly(coset_to_poly(rec.representatives[r]))}});
        j["representatives"] = reps;
        out << j.dump(2) << '\n';
      } else if (!p_out.empty()) {
        out << "classes " << rec.representatives.size() << " total " << rec.total_enumerated << " -> " << p_out
            << '\n';
      } else {
        out << text.str();
      }
      return 0;
    }

    if (mindist->parsed()) {
      const FieldPtr field = Field::of_size(m_q);
      Construction c;
      c.field = field;
      if (!m_qc.empty()) {
        const auto comma = m_qc.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("--qc expects 'm,ell'");
        c.base = Construction::Base::quasi_cyclic;
        c.n = std::stoul(m_qc.substr(0, comma));
        c.ell = std::stoul(m_qc.substr(comma + 1));
        if (m_n != 0 && m_n != c.n * c.ell)
          throw std::invalid_argument("--n " + std::to_string(m_n) + " differs from m * ell = " +
                                      std::to_string(c.n * c.ell));
        c.polys = {coset_to_poly(parse_generator(CosetTable::make(field, c.n), m_gen))};
        if (c.ell >= 2) {
          if (m_f2.empty()) throw std::invalid_argument("--qc with ell >= 2 needs --f2");
          c.polys.push_back(parse_poly(field, m_f2));
        }
        if (c.ell >= 3) {
          if (m_f3.empty()) throw std::invalid_argument("--qc with ell >= 3 needs --f3");
          c.polys.push_back(parse_poly(field, m_f3));
        }
        if (c.ell > 3) throw std::invalid_argument("the command line accepts ell <= 3");
      } else {
        if (m_n == 0) throw std::invalid_argument("--n is required without --qc");
        c.n = m_n;
        if (m_check) {
          c.base = Construction::Base::check;
          c.polys = {parse_poly(field, m_gen)};
        } else {
          c.base = Construction::Base::cyclic;
          c.polys = {coset_to_poly(parse_generator(CosetTable::make(field, m_n), m_gen))};
        }
      }
      if (!m_steps.empty()) {
        const auto full = parse_construction(field, c.chain() + ">" + m_steps, [&] {
          std::vector<std::string> p;
          for (const auto& x : c.polys) p.push_back(format_poly(x));
          return p;
        }());
        c.steps = full.steps;
      }
      const GeneratorMatrix m = c.build();
      DistanceCertificate cert;
      if (m_upper) {
        UpperBoundOptions u;
        u.iterations = m_iterations;
        u.seed = m_seed;
        u.target = m_target;
        cert = upper_bound_search(m, u);
      } else {
        DistanceOptions d;
        d.budget = m_budget;
        d.threads = m_common.threads;
        cert = min_distance(m, d);
      }
      const bool valid = witness_valid(m, cert);
      if (m_common.json_out()) {
        json j{{"q", m_q}, {"n", m.n()}, {"k", m.k()}, {"construction", c.chain()},
               {"certificate", cert_json(cert)}, {"witness_valid", valid}};
        out << j.dump(2) << '\n';
      } else {
        out << params(m.n(), m.k(), m_q) << ' ' << cert_text(cert) << " method=" << to_string(cert.method)
            << " codewords=" << cert.codewords_examined << (cert.budget_exhausted ? " budget-exhausted" : "")
            << '\n';
        if (m_show_witness) {
          out << "witness";
          for (auto x : cert.witness) out << ' ' << x.v;
          out << '\n';
        }
      }
      return valid ? 0 : 3;
    }

    if (search->parsed()) {
      const FieldPtr field = Field::of_size(s_q);
      BKLCTable bklc = BKLCTable::load_file(s_bklc.empty() ? default_data_path("bklc.txt") : s_bklc);
      SearchConfig cfg;
      cfg.field = field;
      cfg.n = s_m;
      cfg.ell = s_ell;
      cfg.kmin = s_kmin;
      cfg.kmax = s_kmax;
      cfg.trials = s_trials;
      cfg.seed = s_seed;
      cfg.mode = parse_mode(s_mode);
      cfg.distance.budget = s_budget;
      cfg.distance.threads = s_common.threads;
      cfg.bklc = &bklc;
      if (!s_common.quiet) cfg.progress = [&](const std::string& msg) { err << "[search] " << msg << '\n'; };
      if (!s_force.empty()) {
        std::ifstream f(s_force);
        if (!f) throw std::runtime_error("cannot open '" + s_force + "'");
        std::string line;
        while (std::getline(f, line)) {
          if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
          std::istringstream ls(line);
          std::string chain;
          if (!(ls >> chain)) continue;
          std::vector<std::string> polys;
          for (std::string p; ls >> p;) polys.push_back(p);
          cfg.forced.push_back(parse_construction(field, chain, polys));
        }
      }
      std::vector<CodeRecord> records;
      if (s_sweep) {
        records = cyclic_sweep(cfg);
      } else {
        records = asr_search(cfg);
      }
      if (s_derive) {
        DeriveOptions dopts;
        dopts.distance = cfg.distance;
        std::vector<CodeRecord> derived;
        for (const auto& r : records)
          if (r.seed == std::nullopt && !s_sweep)
            for (auto& d : derive_neighbors(r, &bklc, dopts)) derived.push_back(std::move(d));
        for (auto& d : derived) records.push_back(std::move(d));
      }
      std::ostringstream text;
      write_records(text, records, s_sweep ? "cyclic-sweep" : "asr");
      if (!s_out.empty()) write_text_file(s_out, text.str());
      if (s_common.json_out()) {
        json arr = json::array();
        for (const auto& r : records) arr.push_back(record_json(r));
        out << arr.dump(2) << '\n';
      } else {
        out << text.str();
      }
      return 0;
    }

    if (verify->parsed()) {
      v_opts.threads = v_common.threads;
      const auto entries = read_manifest_file(v_manifest);
      json arr = json::array();
      std::size_t passed = 0, run_count = 0;
      for (const auto& e : entries) {
        if (!v_only.empty() && e.label != v_only) continue;
        ++run_count;
        if (!v_common.quiet) err << "[verify] " << e.label << " ..." << '\n';
        const auto r = verify_entry(e, v_opts);
        if (r.pass) ++passed;
        if (v_common.json_out()) {
          json j{{"label", e.label}, {"pass", r.pass}, {"expected", {{"q", e.q}, {"n", e.n}, {"k", e.k}, {"d", e.d}}},
                 {"level", e.level == ManifestEntry::Level::exact ? "exact" : "upper"},
                 {"construction", e.chain}, {"n", r.n}, {"k", r.k}, {"certificate", cert_json(r.cert)},
                 {"witness_valid", r.witness_checked}, {"seconds", r.seconds}, {"detail", r.detail}};
          arr.push_back(j);
        } else {
          std::ostringstream line;
          line << (r.pass ? "PASS " : "FAIL ") << e.label << ' '
               << "[" << e.n << "," << e.k << "," << e.d << "]_" << e.q << ' '
               << (e.level == ManifestEntry::Level::exact ? "exact" : "upper") << ": ";
          if (r.n == e.n && r.k == e.k && r.cert.upper > 0)
            line << cert_text(r.cert) << (r.witness_checked ? " witness-ok" : " witness-BAD");
          if (!r.detail.empty()) line << (r.cert.upper > 0 ? "; " : "") << r.detail;
          char secs[32];
          std::snprintf(secs, sizeof secs, " (%.2fs)", r.seconds);
          out << line.str() << secs << '\n';
        }
      }
      if (v_common.json_out()) {
        out << arr.dump(2) << '\n';
      } else {
        out << passed << "/" << run_count << " entries passed\n";
      }
      if (run_count == 0) {
        err << "no manifest entries matched\n";
        return 1;
      }
      return passed == run_count ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 3;
  }
  return 64;
}

}  // namespace cyclequiv
