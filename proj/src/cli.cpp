#include "burnside/cli.hpp"

#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "burnside/cache.hpp"
#include "burnside/json_io.hpp"

namespace burnside {

namespace {

struct CommonOpts {
  std::string format = "text";
  std::string cache_dir;
  int order_bound = kDefaultOrderBound;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cache-dir", o.cache_dir,
                  "classification cache directory (BURNSIDE_CACHE_DIR overrides)");
  cmd->add_option("--order-bound", o.order_bound, "maximum allowed group order")
      ->check(CLI::PositiveNumber);
}

void emit(const Json& j, const std::string& text, const CommonOpts& o, std::ostream& out) {
  if (o.format == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

ClassificationPtr classification_for(const std::string& spec, const CommonOpts& o) {
  return load_or_compute_classification(spec, o.order_bound, resolve_cache_dir(o.cache_dir));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Burnside ring computations and stable-map decompositions"};
  app.require_subcommand(1);

  std::string marks_group;
  CommonOpts marks_opts;
  CLI::App* marks = app.add_subcommand("marks", "table of marks of a group");
  marks->add_option("--group", marks_group, "group spec")->required();
  add_common(marks, marks_opts);

  std::string ideals_group;
  CommonOpts ideals_opts;
  CLI::App* ideals = app.add_subcommand(
      "ideals", "fixed-point ideals of the augmentation ideal, with the expected trichotomy");
  ideals->add_option("--group", ideals_group, "group spec")->required();
  add_common(ideals, ideals_opts);

  std::string complete_group, complete_module = "regular", complete_target;
  int complete_depth = 12;
  CommonOpts complete_opts;
  CLI::App* complete = app.add_subcommand(
      "complete", "adic completion of a module: quotient tower, closed form and comparison");
  complete->add_option("--group", complete_group, "group spec")->required();
  complete->add_option("--module", complete_module, "module kind: regular or bundle")
      ->check(CLI::IsMember({"regular", "bundle"}));
  complete->add_option("--target", complete_target, "target group spec (bundle module)");
  complete->add_option("--depth", complete_depth, "tower depth")->check(CLI::PositiveNumber);
  add_common(complete, complete_opts);

  std::string sm_source, sm_target;
  long long sm_prime = 0;
  CommonOpts sm_opts;
  CLI::App* sm = app.add_subcommand(
      "stable-maps", "wedge decomposition of stable maps between classifying spaces");
  sm->add_option("--source", sm_source, "source group spec")->required();
  sm->add_option("--target", sm_target, "target group spec")->required();
  sm->add_option("--prime", sm_prime, "p-complete the source first");
  add_common(sm, sm_opts);

  std::string dual_group;
  long long dual_prime = 0;
  CommonOpts dual_opts;
  CLI::App* dual = app.add_subcommand("dual", "dual decomposition of a classifying spectrum");
  dual->add_option("--group", dual_group, "group spec")->required();
  dual->add_option("--prime", dual_prime, "restrict to one prime, all summands completed");
  add_common(dual, dual_opts);

  std::string cc_source, cc_target;
  int cc_depth = 12;
  CommonOpts cc_opts;
  CLI::App* cc = app.add_subcommand(
      "crosscheck", "consistency of the wedge pi0, the closed form and the tower oracle");
  cc->add_option("--source", cc_source, "source group spec")->required();
  cc->add_option("--target", cc_target, "target group spec")->required();
  cc->add_option("--depth", cc_depth, "initial tower depth")->check(CLI::PositiveNumber);
  add_common(cc, cc_opts);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (marks->parsed()) {
      ClassificationPtr cls = classification_for(marks_group, marks_opts);
      TableOfMarks t = table_of_marks(cls);
      emit(marks_json(t), marks_text(t), marks_opts, out);
      return 0;
    }

    if (ideals->parsed()) {
      ClassificationPtr cls = classification_for(ideals_group, ideals_opts);
      RingPtr ring = BurnsideRing::create(cls);
      TrichotomyReport report = ring->verify_trichotomy();
      emit(trichotomy_json(ring->group()->name(), report),
           trichotomy_text(ring->group()->name(), report), ideals_opts, out);
      return report.pass ? 0 : 1;
    }

    if (complete->parsed()) {
      if (complete_module == "bundle" && complete_target.empty())
        throw std::invalid_argument("bundle module needs --target");
      ClassificationPtr cls = classification_for(complete_group, complete_opts);
      RingPtr ring = BurnsideRing::create(cls);
      CompletionReport r;
      r.group_name = ring->group()->name();
      r.module_kind = complete_module;
      GModule m = complete_module == "bundle"
                      ? bundle_module(ring, parse_group(complete_target, complete_opts.order_bound),
                                      complete_opts.order_bound)
                      : regular_module(ring);
      if (complete_module == "bundle")
        r.target_name = parse_group(complete_target, complete_opts.order_bound)->name();
      r.tower = quotient_tower(m, ring->augmentation_ideal(), complete_depth);
      r.tower_class = classify_completion(r.tower);
      r.closed_form = closed_form_completion(m);
      r.match = r.tower_class.confidence != Confidence::unresolved &&
                r.tower_class.same_shape(r.closed_form);
      emit(completion_json(r), completion_text(r), complete_opts, out);
      return r.match ? 0 : 1;
    }

    if (sm->parsed()) {
      ClassificationPtr cls = classification_for(sm_source, sm_opts);
      GroupPtr target = parse_group(sm_target, sm_opts.order_bound);
      WedgeDecomposition d =
          sm_prime > 0 ? p_local_decomposition(cls, target, sm_prime, sm_opts.order_bound)
                       : function_decomposition(cls, target, sm_opts.order_bound);
      emit(decomposition_json(d), decomposition_text(d), sm_opts, out);
      return 0;
    }

    if (dual->parsed()) {
      ClassificationPtr cls = classification_for(dual_group, dual_opts);
      WedgeDecomposition d = dual_prime > 0
                                 ? dual_decomposition_at(cls, dual_prime, dual_opts.order_bound)
                                 : dual_decomposition(cls, dual_opts.order_bound);
      emit(decomposition_json(d), decomposition_text(d), dual_opts, out);
      return 0;
    }

    if (cc->parsed()) {
      ClassificationPtr cls = classification_for(cc_source, cc_opts);
      GroupPtr target = parse_group(cc_target, cc_opts.order_bound);
      CrosscheckReport r = crosscheck(cls, target, cc_depth, std::max(cc_depth, 18),
                                      cc_opts.order_bound);
      emit(crosscheck_json(r), crosscheck_text(r), cc_opts, out);
      return r.pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace burnside
