#include "burstcodes/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "burstcodes/burst_code.hpp"
#include "burstcodes/channel.hpp"
#include "burstcodes/errors.hpp"
#include "burstcodes/locator.hpp"
#include "burstcodes/pattern.hpp"
#include "burstcodes/pipeline.hpp"
#include "burstcodes/verify.hpp"
#include "burstcodes/vt.hpp"

namespace burstcodes {

namespace {

// Exponent in the dense-count lower bound 2^n (1 - n^(1 - log2 e)).
double nondense_reference(std::size_t n) {
  return std::pow(static_cast<double>(n), 1.0 - std::log2(std::exp(1.0)));
}

BitString read_word(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t");
    return BitString::from_text(std::string_view(line).substr(first, last - first + 1));
  }
  throw FormatError("expected a 0/1 word on standard input");
}

std::string join_values(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string fixed6(double x) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(6);
  ss << x;
  return ss.str();
}

struct SyndromeFlags {
  std::int64_t c0 = 0;
  std::int64_t c1 = 0;
  std::vector<std::int64_t> v;
  std::vector<std::int64_t> b;

  SyndromeSet to_set(std::size_t k) const {
    if (v.size() != syndrome_count(k) || b.size() != syndrome_count(k)) {
      throw std::invalid_argument("--v and --b each need k(k+1)/2 values");
    }
    return SyndromeSet{c0, c1, v, b};
  }
};

void add_syndrome_flags(CLI::App* cmd, SyndromeFlags& s) {
  cmd->add_option("--c0", s.c0, "marker count residue mod 4")->required();
  cmd->add_option("--c1", s.c1, "marker checksum residue mod 2n")->required();
  cmd->add_option("--v", s.v, "subsequence checksum residues, (stride,start) order")
      ->required()
      ->expected(-1)
      ->delimiter(',');
  cmd->add_option("--b", s.b, "subsequence weight parities, (stride,start) order")
      ->required()
      ->expected(-1)
      ->delimiter(',');
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"toolkit for binary codes correcting one burst of deletions"};
  app.name("burstcodes");
  app.require_subcommand(1);

  int status = 0;

  // ---- enumerate ----------------------------------------------------
  struct {
    std::size_t n = 0, k = 0, delta = 0;
    SyndromeFlags syn;
  } en;
  {
    auto* cmd = app.add_subcommand("enumerate", "list every codeword of one syndrome bucket");
    cmd->add_option("--n", en.n, "code length")->required();
    cmd->add_option("--k", en.k, "burst bound")->required();
    cmd->add_option("--delta", en.delta, "window length")->required();
    add_syndrome_flags(cmd, en.syn);
    cmd->callback([&] {
      CodeInstance inst{{en.n, PatternParams::with_delta(en.k, en.delta)},
                        en.syn.to_set(en.k)};
      for (const BitString& x : enumerate_code(inst)) out << x.to_text() << "\n";
    });
  }

  // ---- search --------------------------------------------------------
  struct {
    std::size_t n = 0, k = 0, delta = 0;
  } se;
  {
    auto* cmd = app.add_subcommand("search", "find the largest syndrome bucket");
    cmd->add_option("--n", se.n, "code length")->required();
    cmd->add_option("--k", se.k, "burst bound")->required();
    cmd->add_option("--delta", se.delta, "window length")->required();
    cmd->callback([&] {
      CodeParams params{se.n, PatternParams::with_delta(se.k, se.delta)};
      SearchResult r = search_best(params);
      out << "command=search\n";
      out << "n=" << se.n << "\nk=" << se.k << "\ndelta=" << se.delta << "\n";
      out << "dense_total=" << r.dense_total << "\n";
      out << "buckets=" << r.bucket_count << "\n";
      out << "best_size=" << r.size << "\n";
      if (r.size > 0) {
        out << "redundancy=" << fixed6(r.redundancy) << "\n";
        // Counting guarantee: some bucket has at least dense_total
        // codewords spread over 8n (2 delta)^pairs syndrome slots.
        double slots = 8.0 * static_cast<double>(se.n);
        for (std::size_t i = 0; i < syndrome_count(se.k); ++i) {
          slots *= 2.0 * static_cast<double>(se.delta);
        }
        out << "redundancy_bound=" << fixed6(static_cast<double>(se.n) -
                                             std::log2(static_cast<double>(r.dense_total) / slots))
            << "\n";
        out << "c0=" << r.syn.c0 << "\n";
        out << "c1=" << r.syn.c1 << "\n";
        out << "v=" << join_values(r.syn.v) << "\n";
        out << "b=" << join_values(r.syn.b) << "\n";
      }
    });
  }

  // ---- decode ----------------------------------------------------------
  struct {
    std::size_t n = 0, k = 0, delta = 0;
    SyndromeFlags syn;
  } de;
  {
    auto* cmd = app.add_subcommand("decode", "repair one burst of deletions in a codeword");
    cmd->add_option("--n", de.n, "code length")->required();
    cmd->add_option("--k", de.k, "burst bound")->required();
    cmd->add_option("--delta", de.delta, "window length")->required();
    add_syndrome_flags(cmd, de.syn);
    cmd->callback([&] {
      CodeInstance inst{{de.n, PatternParams::with_delta(de.k, de.delta)},
                        de.syn.to_set(de.k)};
      out << decode(read_word(in), inst).to_text() << "\n";
    });
  }

  // ---- encode ----------------------------------------------------------
  struct {
    std::size_t d = 0, k = 0, delta = 0;
  } pe;
  {
    auto* cmd = app.add_subcommand("encode", "wrap a message for burst protection");
    cmd->add_option("--d", pe.d, "message length")->required();
    cmd->add_option("--k", pe.k, "burst bound")->required();
    cmd->add_option("--delta", pe.delta, "window length (0 = default for d)");
    cmd->callback([&] {
      out << encode(read_word(in), PipelineParams::make(pe.d, pe.k, pe.delta)).to_text()
          << "\n";
    });
  }

  // ---- pipeline-decode ---------------------------------------------------
  struct {
    std::size_t d = 0, k = 0, delta = 0;
  } pd;
  {
    auto* cmd = app.add_subcommand("pipeline-decode", "recover the message from a corrupted codeword");
    cmd->add_option("--d", pd.d, "message length")->required();
    cmd->add_option("--k", pd.k, "burst bound")->required();
    cmd->add_option("--delta", pd.delta, "window length (0 = default for d)");
    cmd->callback([&] {
      out << pipeline_decode(read_word(in), PipelineParams::make(pd.d, pd.k, pd.delta))
                 .to_text()
          << "\n";
    });
  }

  // ---- corrupt -------------------------------------------------------
  struct {
    std::size_t start = 0, len = 0, k = 0;
    std::uint64_t seed = 0;
    bool seeded = false;
  } co;
  {
    auto* cmd = app.add_subcommand("corrupt", "delete one burst from a word");
    cmd->add_option("--start", co.start, "first deleted position (1-based)");
    cmd->add_option("--len", co.len, "burst length");
    cmd->add_option("--k", co.k, "burst bound for random corruption");
    auto* seed = cmd->add_option("--seed", co.seed, "draw burst length and position");
    cmd->callback([&, seed] {
      co.seeded = seed->count() > 0;
      BitString x = read_word(in);
      std::size_t start = co.start;
      std::size_t len = co.len;
      if (co.seeded) {
        if (co.k == 0) throw std::invalid_argument("--seed corruption needs --k");
        if (co.k >= x.size()) throw std::invalid_argument("--k must be smaller than the word");
        std::mt19937_64 eng(co.seed);
        len = 1 + eng() % co.k;
        start = 1 + eng() % (x.size() - len + 1);
        err << "burst_start=" << start << "\nburst_len=" << len << "\n";
      } else if (start == 0 || len == 0) {
        throw std::invalid_argument("corrupt needs --start and --len, or --seed with --k");
      }
      out << apply_burst(x, {start - 1, len}).to_text() << "\n";
    });
  }

  // ---- locate -------------------------------------------------------
  struct {
    std::size_t n = 0, k = 0, delta = 0;
    std::int64_t c0 = 0, c1 = 0;
  } lo;
  {
    auto* cmd = app.add_subcommand("locate", "narrow a burst down to candidate windows");
    cmd->add_option("--n", lo.n, "code length")->required();
    cmd->add_option("--k", lo.k, "burst bound")->required();
    cmd->add_option("--delta", lo.delta, "window length")->required();
    cmd->add_option("--c0", lo.c0, "marker count residue mod 4")->required();
    cmd->add_option("--c1", lo.c1, "marker checksum residue mod 2n")->required();
    cmd->callback([&] {
      LocateResult r = locate(read_word(in), PatternParams::with_delta(lo.k, lo.delta),
                              {lo.c0, lo.c1, lo.n});
      out << "command=locate\n";
      out << "n=" << lo.n << "\nk=" << lo.k << "\ndelta=" << lo.delta << "\n";
      out << "burst_len=" << r.burst_len << "\n";
      out << "candidates=" << r.candidates.size() << "\n";
      for (std::size_t i = 0; i < r.candidates.size(); ++i) {
        const auto& c = r.candidates[i];
        out << "candidate_" << i + 1 << "_lo=" << c.range.lo << "\n";
        out << "candidate_" << i + 1 << "_hi=" << c.range.hi << "\n";
        out << "candidate_" << i + 1 << "_rule=" << c.rule << "\n";
      }
    });
  }

  // ---- density -------------------------------------------------------
  struct {
    std::size_t n = 0, k = 0, delta = 0;
    std::string mode = "exact";
    std::uint64_t samples = 0, seed = 0;
  } dn;
  {
    auto* cmd = app.add_subcommand("density", "count or estimate marker-dense strings");
    cmd->add_option("--n", dn.n, "string length")->required();
    cmd->add_option("--k", dn.k, "marker parameter")->required();
    cmd->add_option("--delta", dn.delta, "window length (0 = default for n)");
    cmd->add_option("--mode", dn.mode, "exact | mc")
        ->check(CLI::IsMember({"exact", "mc"}));
    cmd->add_option("--samples", dn.samples, "sample count for mc mode");
    auto* seed = cmd->add_option("--seed", dn.seed, "sample seed for mc mode");
    cmd->callback([&, seed] {
      std::size_t delta = dn.delta ? dn.delta : PatternParams::formula_delta(dn.k, dn.n);
      PatternParams params = PatternParams::with_delta(dn.k, delta);
      out << "command=density\n";
      out << "n=" << dn.n << "\nk=" << dn.k << "\ndelta=" << delta << "\n";
      out << "mode=" << dn.mode << "\n";
      double reference = nondense_reference(dn.n);
      if (dn.mode == "exact") {
        std::uint64_t count = dense_count_exact(dn.n, params);
        double total = std::pow(2.0, static_cast<double>(dn.n));
        out << "dense=" << count << "\n";
        out << "fraction_dense=" << fixed6(static_cast<double>(count) / total) << "\n";
      } else {
        if (seed->count() == 0) throw std::invalid_argument("--mode mc needs --seed");
        if (dn.samples == 0) throw std::invalid_argument("--mode mc needs --samples");
        McDensity mc = dense_fraction_mc(dn.n, params, dn.samples, dn.seed);
        out << "samples=" << mc.samples << "\nseed=" << mc.seed << "\n";
        out << "dense=" << mc.dense << "\n";
        out << "fraction_dense=" << fixed6(mc.fraction) << "\n";
      }
      out << "reference_nondense_max=" << fixed6(reference) << "\n";
      out << "reference_dense_min=" << fixed6(1.0 - reference) << "\n";
    });
  }

  // ---- verify -------------------------------------------------------
  struct {
    std::size_t n = 0, k = 0, delta = 0, buckets = 3;
    std::uint64_t seed = 0;
    bool exhaustive = false;
  } ve;
  {
    auto* cmd = app.add_subcommand("verify", "exhaustive round-trip, disjointness and locator sweeps");
    cmd->add_option("--n", ve.n, "code length")->required();
    cmd->add_option("--k", ve.k, "burst bound")->required();
    cmd->add_option("--delta", ve.delta, "window length")->required();
    cmd->add_flag("--exhaustive", ve.exhaustive, "round-trip every bucket");
    cmd->add_option("--buckets", ve.buckets, "random buckets to round-trip (default 3)");
    auto* seed = cmd->add_option("--seed", ve.seed, "bucket sampling seed");
    cmd->callback([&, seed] {
      if (!ve.exhaustive && seed->count() == 0) {
        throw std::invalid_argument("verify needs --seed unless --exhaustive");
      }
      CodeSweepOptions opt;
      opt.n = ve.n;
      opt.k = ve.k;
      opt.delta = ve.delta;
      opt.random_buckets = ve.buckets;
      opt.seed = ve.seed;
      opt.all_buckets = ve.exhaustive;
      CodeSweepReport code = run_code_sweep(opt);
      LocateSweepReport loc = run_locate_sweep(ve.n, ve.k, ve.delta);
      out << "command=verify\n";
      out << "n=" << ve.n << "\nk=" << ve.k << "\ndelta=" << ve.delta << "\n";
      out << "exhaustive=" << (ve.exhaustive ? 1 : 0) << "\n";
      if (!ve.exhaustive) out << "seed=" << ve.seed << "\n";
      out << "dense_total=" << code.dense_total << "\n";
      out << "buckets=" << code.bucket_count << "\n";
      out << "best_size=" << code.best_size << "\n";
      out << "buckets_checked=" << code.buckets_checked << "\n";
      out << "words_decoded=" << code.words_decoded << "\n";
      out << "wrong_decodes=" << code.wrong_decodes << "\n";
      out << "decode_failures=" << code.decode_failures << "\n";
      out << "ambiguities=" << code.ambiguities << "\n";
      out << "disjointness_violations=" << code.disjointness_violations << "\n";
      out << "partition_ok=" << (code.partition_ok ? 1 : 0) << "\n";
      out << "pigeonhole_ok=" << (code.pigeonhole_ok ? 1 : 0) << "\n";
      out << "locate_cases=" << loc.cases_checked << "\n";
      out << "locate_unsound=" << loc.unsound << "\n";
      out << "locate_oversized=" << loc.oversized << "\n";
      out << "locate_failures=" << loc.locate_failures << "\n";
      out << "locate_max_candidates=" << loc.max_candidates << "\n";
      bool ok = code.ok() && loc.ok();
      out << "status=" << (ok ? "pass" : "fail") << "\n";
      if (!ok) {
        const std::string& issue = code.ok() ? loc.first_issue : code.first_issue;
        out << "issue=" << issue << "\n";
        status = 1;
      }
    });
  }

  // ---- layout -------------------------------------------------------
  struct {
    std::size_t d = 0, k = 0, delta = 0;
  } la;
  {
    auto* cmd = app.add_subcommand("layout", "print the encoder segment layout");
    cmd->add_option("--d", la.d, "message length")->required();
    cmd->add_option("--k", la.k, "burst bound")->required();
    cmd->add_option("--delta", la.delta, "window length (0 = default for d)");
    cmd->callback([&] {
      PipelineParams p = PipelineParams::make(la.d, la.k, la.delta);
      out << "command=layout\n";
      out << "d=" << p.d << "\nk=" << p.k << "\ndelta=" << p.pattern.delta << "\n";
      out << "block_len=" << p.block_len << "\n";
      out << "m1=" << p.m1 << "\nw1=" << p.w1 << "\n";
      out << "m2=" << p.m2 << "\nw2=" << p.w2 << "\n";
      out << "m3=" << p.m3 << "\n";
      out << "total=" << p.total() << "\n";
      out << "overhead=" << p.total() - p.d << "\n";
      out << "c0_bits=2\n";
      out << "c1_bits_m1=" << ceil_log2(2 * p.m1) << "\n";
      out << "c1_bits_m2=" << ceil_log2(2 * p.m2) << "\n";
      out << "v_bits=" << ceil_log2(p.pattern.delta) << "\n";
      out << "b_bits=1\n";
      out << "syndrome_fields=" << syndrome_count(p.k) << "\n";
      double n = static_cast<double>(p.total());
      out << "reference_log2_n=" << fixed6(std::log2(n)) << "\n";
      out << "reference_log2_log2_n=" << fixed6(std::log2(std::log2(n))) << "\n";
    });
  }

  auto begin = std::chrono::steady_clock::now();
  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return 3;
  } catch (const DecodeFailure& e) {
    err << "decode failure: " << e.what() << "\n";
    return 4;
  } catch (const AmbiguityError& e) {
    err << "ambiguity: " << e.what() << "\n";
    return 4;
  } catch (const std::logic_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - begin);
  err << "elapsed_ms=" << elapsed.count() << "\n";
  return status;
}

}  // namespace burstcodes
