// Copyright 2026 The tbtrellis Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tbt/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tbt/decode.hpp"
#include "tbt/embedding.hpp"
#include "tbt/io.hpp"
#include "tbt/peakreduce.hpp"
#include "tbt/search.hpp"

namespace tbt {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return std::move(os).str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw precondition_error("cannot write " + path);
  out << text;
}

std::string scp_line(const StateComplexityProfile& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.sizes.size(); ++i) {
    if (i) os << ' ';
    if (p.dims[i] >= 0) {
      os << p.dims[i];
    } else {
      os << '|' << p.sizes[i] << '|';  // raw size when not a power of q
    }
  }
  return std::move(os).str();
}

void print_summary(const Trellis& t, std::ostream& out, std::size_t cap) {
  StateComplexityProfile p = scp(t);
  out << "SCP: " << scp_line(p) << "\n";
  if (p.exact) {
    out << "s_max: " << p.s_max << "\n";
  } else {
    out << "s_max_size: " << p.s_max_size << "\n";
  }
  out << "codewords: " << represented_code(t, cap).size() << "\n";
}

std::string hyperplane_text(const std::vector<Vec>& basis) {
  if (basis.empty()) return "{0}";
  std::string s;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) s += ',';
    s += basis[i].digits();
  }
  return s;
}

void emit_document(const Trellis& t, const std::string& out_path,
                   std::ostream& out) {
  std::string doc = emit_trellis_document(t);
  if (out_path.empty()) {
    out << doc;
  } else {
    write_file(out_path, doc);
  }
}

struct CommonArgs {
  std::string out_path;
  std::string matrix_out;
  std::size_t cap = kDefaultEnumCap;
};

int cmd_construct(const std::string& matrix_path, const CommonArgs& common,
                  std::ostream& out) {
  ParityCheckMatrix h = parse_matrix_file(read_file(matrix_path));
  Trellis t = bcjr_construct(h, common.cap);
  print_summary(t, out, common.cap);
  emit_document(t, common.out_path, out);
  return 0;
}

int cmd_embed(const std::string& matrix_path, std::size_t index,
              const std::string& alpha_digits,
              const std::string& hyperplane_csv, bool auto_hyperplane,
              const CommonArgs& common, std::ostream& out) {
  ParityCheckMatrix h = parse_matrix_file(read_file(matrix_path));
  Vec alpha = Vec::from_digits(h.field(), alpha_digits);

  std::vector<Vec> hyperplane;
  if (auto_hyperplane) {
    std::vector<Vec> basis = state_space_basis(h, index);
    auto options = hyperplanes_avoiding(basis, alpha);
    if (options.empty()) {
      throw precondition_error("no hyperplane avoids alpha");
    }
    hyperplane = options.front();
  } else {
    std::vector<Vec> given;
    std::istringstream is(hyperplane_csv);
    std::string item;
    while (std::getline(is, item, ',')) {
      if (!item.empty()) given.push_back(Vec::from_digits(h.field(), item));
    }
    hyperplane = span_basis(given, h.field(), h.rows());
  }

  EmbeddingSpec spec{index, alpha, hyperplane};
  EmbeddingResult result = embed(h, spec, common.cap);

  out << "alpha: " << alpha.digits() << "\n";
  out << "hyperplane: " << hyperplane_text(hyperplane) << "\n";
  std::string dagger = emit_matrix_file(result.h_dagger);
  out << "H-dagger:\n" << dagger;
  if (!common.matrix_out.empty()) write_file(common.matrix_out, dagger);
  print_summary(result.tbt, out, common.cap);
  emit_document(result.tbt, common.out_path, out);
  return 0;
}

int cmd_check(const std::string& doc_path, const CommonArgs& common,
              std::ostream& out) {
  Trellis t = parse_trellis_document(read_file(doc_path));
  out << "q: " << t.field().q() << "\n";
  out << "depth: " << t.depth() << "\n";
  out << "tail_biting: " << (t.tail_biting() ? "true" : "false") << "\n";
  print_summary(t, out, common.cap);
  out << "linear: " << (is_linear(t, common.cap) ? "true" : "false") << "\n";
  out << "biproper: " << (is_biproper(t) ? "true" : "false") << "\n";
  MergeWitness w = is_mergeable(t, common.cap);
  if (w.mergeable) {
    out << "nonmergeable: false (class " << w.cls << ": " << w.a->digits()
        << " ~ " << w.b->digits() << ")\n";
  } else {
    out << "nonmergeable: true\n";
  }
  out << "reduced: " << (is_reduced(t) ? "true" : "false") << "\n";
  return 0;
}

int cmd_reduce_peak(const std::string& matrix_path, const CommonArgs& common,
                    std::ostream& out) {
  ParityCheckMatrix h = parse_matrix_file(read_file(matrix_path));
  PeakReduceResult r = reduce_peak(h, common.cap);
  out << "pattern: " << peak_kind_name(r.pattern.kind) << " p=" << r.pattern.p
      << "\n";
  out << "guard: |V_" << r.pattern.p - 1 << "| >= " << r.pattern.guard_floor
      << (r.pattern.guard_ok ? " holds" : " fails (best-effort attempt)")
      << "\n";
  if (!r.attempted) {
    out << "result: no candidate parameters\n";
    return 0;
  }
  out << "alpha: " << r.spec->alpha.digits() << "\n";
  out << "hyperplane: " << hyperplane_text(r.spec->hyperplane) << "\n";
  std::string dagger = emit_matrix_file(r.embedding->h_dagger);
  out << "H-dagger:\n" << dagger;
  if (!common.matrix_out.empty()) write_file(common.matrix_out, dagger);
  out << "s_max: " << r.s_max_before << " -> " << r.s_max_after << "\n";
  out << "result: " << (r.succeeded ? "success" : "no reduction") << "\n";
  if (!common.out_path.empty()) {
    emit_document(r.embedding->tbt, common.out_path, out);
  }
  return 0;
}

int cmd_search(const std::string& matrix_path, std::size_t max_embeddings,
               std::size_t beam, const std::string& trace_out,
               const CommonArgs& common, std::ostream& out) {
  ParityCheckMatrix h = parse_matrix_file(read_file(matrix_path));
  SearchOptions options;
  options.max_embeddings = max_embeddings;
  options.beam = beam;
  options.cap = common.cap;
  SearchResult r = minimize_tbt(h, options);
  out << "embeddings: " << r.best.embeddings << "\n";
  out << "SCP: " << scp_line(r.best.induced_scp) << "\n";
  out << "s_max: " << r.best.induced_scp.s_max << "\n";
  out << "explored: " << r.explored << "\n";
  out << "exhaustive: " << (r.exhaustive ? "true" : "false") << "\n";
  if (!trace_out.empty()) {
    nlohmann::ordered_json doc;
    doc["trace"] = nlohmann::ordered_json::array();
    for (const EmbeddingSpec& spec : r.best.trace) {
      nlohmann::ordered_json entry;
      entry["index"] = spec.index;
      entry["alpha"] = spec.alpha.digits();
      entry["hyperplane"] = nlohmann::ordered_json::array();
      for (const Vec& v : spec.hyperplane) entry["hyperplane"].push_back(v.digits());
      doc["trace"].push_back(std::move(entry));
    }
    write_file(trace_out, doc.dump(2) + "\n");
  }
  if (!common.out_path.empty()) {
    emit_document(r.best_trellis, common.out_path, out);
  }
  return 0;
}

int cmd_export_dot(const std::string& doc_path, std::ostream& out) {
  Trellis t = parse_trellis_document(read_file(doc_path));
  out << to_dot(t);
  return 0;
}

int cmd_decode(const std::string& doc_path, const std::string& received,
               std::ostream& out) {
  Trellis t = parse_trellis_document(read_file(doc_path));
  DecodeResult r = decode(t, Vec::from_digits(t.field(), received));
  out << "codeword: " << r.codeword.digits() << "\n";
  out << "distance: " << r.distance << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Trellis constructions for linear block codes over prime "
               "fields"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string matrix_path, doc_path, received;
  std::size_t index = 0;
  std::string alpha_digits, hyperplane_csv, trace_out;
  std::size_t max_embeddings = 3, beam = 64;

  auto add_common = [&](CLI::App* sub, bool with_matrix_out) {
    sub->add_option("--out", common.out_path, "write the trellis document here");
    sub->add_option("--cap", common.cap, "enumeration cap");
    if (with_matrix_out) {
      sub->add_option("--matrix-out", common.matrix_out,
                      "write the extended parity matrix here");
    }
  };

  CLI::App* construct =
      app.add_subcommand("construct", "build the minimal conventional trellis");
  construct->add_option("matrix", matrix_path, "parity check matrix file")
      ->required();
  add_common(construct, false);

  CLI::App* embed_cmd =
      app.add_subcommand("embed", "run one embedding construction");
  embed_cmd->add_option("matrix", matrix_path, "parity check matrix file")
      ->required();
  embed_cmd->add_option("--index", index, "time index of the state space")
      ->required();
  embed_cmd->add_option("--alpha", alpha_digits, "state digits, e.g. 01")
      ->required();
  CLI::Option* hyp = embed_cmd->add_option(
      "--hyperplane", hyperplane_csv, "comma-separated hyperplane basis");
  CLI::Option* auto_opt = embed_cmd->add_flag(
      "--auto", "pick the first hyperplane avoiding alpha");
  hyp->excludes(auto_opt);
  add_common(embed_cmd, true);

  CLI::App* check = app.add_subcommand("check", "report trellis properties");
  check->add_option("document", doc_path, "trellis document file")->required();
  add_common(check, false);

  CLI::App* reduce =
      app.add_subcommand("reduce-peak", "lower the peak state-complexity");
  reduce->add_option("matrix", matrix_path, "parity check matrix file")
      ->required();
  add_common(reduce, true);

  CLI::App* search_cmd =
      app.add_subcommand("search", "search recursive embedding constructions");
  search_cmd->add_option("matrix", matrix_path, "parity check matrix file")
      ->required();
  search_cmd->add_option("--max-embeddings", max_embeddings,
                         "number of embedding rounds");
  search_cmd->add_option("--beam", beam, "frontier width (0 = unlimited)");
  search_cmd->add_option("--trace-out", trace_out, "write the winning trace");
  add_common(search_cmd, false);

  CLI::App* dot = app.add_subcommand("export-dot", "render a document as DOT");
  dot->add_option("document", doc_path, "trellis document file")->required();

  CLI::App* decode_cmd =
      app.add_subcommand("decode", "nearest-codeword decode a received word");
  decode_cmd->add_option("document", doc_path, "trellis document file")
      ->required();
  decode_cmd->add_option("received", received, "received word digits")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(matrix_path, common, out);
    if (embed_cmd->parsed()) {
      bool auto_hyp = auto_opt->count() > 0 || hyperplane_csv.empty();
      return cmd_embed(matrix_path, index, alpha_digits, hyperplane_csv,
                       auto_hyp, common, out);
    }
    if (check->parsed()) return cmd_check(doc_path, common, out);
    if (reduce->parsed()) return cmd_reduce_peak(matrix_path, common, out);
    if (search_cmd->parsed()) {
      return cmd_search(matrix_path, max_embeddings, beam, trace_out, common,
                        out);
    }
    if (dot->parsed()) return cmd_export_dot(doc_path, out);
    if (decode_cmd->parsed()) return cmd_decode(doc_path, received, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const cap_error& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tbt
