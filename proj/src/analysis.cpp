#include "posets/analysis.hpp"

#include <sstream>

namespace posets {

namespace {

std::string principal_ideal_name(const Poset& p, int generator) {
  return "(" + p.label(generator) + "]";
}

std::string principal_filter_name(const Poset& p, int generator) {
  return "[" + p.label(generator) + ")";
}

nlohmann::json labels_json(const Subset& s) { return nlohmann::json(s.labels()); }

}  // namespace

AnalysisReport analyze(const Poset& p, std::string name, const CheckOptions& opts) {
  AnalysisReport r{std::move(name), p, build_catalog(p)};
  auto star = star_table(p);
  if (auto* t = std::get_if<StarTable>(&star)) {
    r.pseudocomplemented = true;
    r.star = std::move(*t);
    r.boolean_elems = boolean_elements(*r.star);
    r.dense_elems = dense_elements(*r.star);
    for (const auto& ideal : r.catalog.ideals)
      if (auto witness = star_ideal_witness(*r.star, ideal))
        r.star_ideals.emplace_back(ideal, std::move(*witness));
  } else {
    r.star_failure = std::get<StarCertificate>(star);
  }
  r.theorems = check_all(p, opts);
  return r;
}

nlohmann::json report_json(const TheoremReport& report) {
  nlohmann::json j{
      {"id", report.theorem_id},
      {"status", to_string(report.status)},
      {"checked_instances", report.checked_instances},
      {"counterexample", nullptr},
  };
  if (report.counterexample) {
    nlohmann::json ce{{"detail", report.counterexample->detail}};
    nlohmann::json sets = nlohmann::json::object();
    for (const auto& [name, labels] : report.counterexample->sets) sets[name] = labels;
    nlohmann::json elems = nlohmann::json::object();
    for (const auto& [name, label] : report.counterexample->elements) elems[name] = label;
    ce["sets"] = std::move(sets);
    ce["elements"] = std::move(elems);
    j["counterexample"] = std::move(ce);
  }
  return j;
}

nlohmann::json report_json(const AnalysisReport& r) {
  const Poset& p = r.poset;
  nlohmann::json j;
  j["poset"] = r.name;
  j["n"] = p.size();
  j["elements"] = p.labels();
  j["least"] = p.least() ? nlohmann::json(p.label(*p.least())) : nullptr;
  j["greatest"] = p.greatest() ? nlohmann::json(p.label(*p.greatest())) : nullptr;

  auto listed = [&](const std::vector<Subset>& sets, const std::vector<int>& gens,
                    bool ideals) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < sets.size(); ++i)
      out.push_back({{"generator", p.label(gens[i])},
                     {"name", ideals ? principal_ideal_name(p, gens[i])
                                     : principal_filter_name(p, gens[i])},
                     {"elements", labels_json(sets[i])}});
    return out;
  };
  j["ideals"] = listed(r.catalog.ideals, r.catalog.ideal_generators, true);
  j["filters"] = listed(r.catalog.filters, r.catalog.filter_generators, false);

  auto name_list = [&](const std::vector<std::size_t>& idx, bool ideals) {
    nlohmann::json out = nlohmann::json::array();
    for (auto i : idx) {
      const int g = ideals ? r.catalog.ideal_generators[i] : r.catalog.filter_generators[i];
      out.push_back(ideals ? principal_ideal_name(p, g) : principal_filter_name(p, g));
    }
    return out;
  };
  j["prime_ideals"] = name_list(r.catalog.prime_ideals, true);
  j["prime_filters"] = name_list(r.catalog.prime_filters, false);
  j["ultrafilters"] = name_list(r.catalog.ultrafilters, false);

  j["pseudocomplemented"] = r.pseudocomplemented;
  if (r.star) {
    nlohmann::json star = nlohmann::json::object();
    for (int e = 0; e < p.size(); ++e) star[p.label(e)] = p.label(r.star->star(e));
    j["star"] = std::move(star);
    j["boolean_elements"] = labels_json(*r.boolean_elems);
    j["dense_elements"] = labels_json(*r.dense_elems);
    nlohmann::json si = nlohmann::json::array();
    for (const auto& [ideal, witness] : r.star_ideals)
      si.push_back({{"ideal", labels_json(ideal)}, {"witness_filter", labels_json(witness)}});
    j["star_ideals"] = std::move(si);
  } else {
    j["star"] = nullptr;
    j["boolean_elements"] = nullptr;
    j["dense_elements"] = nullptr;
    j["star_ideals"] = nullptr;
    j["not_pseudocomplemented_witness"] =
        r.star_failure && r.star_failure->element
            ? nlohmann::json(p.label(*r.star_failure->element))
            : nullptr;
  }

  nlohmann::json th = nlohmann::json::array();
  for (const auto& rep : r.theorems) th.push_back(report_json(rep));
  j["theorems"] = std::move(th);
  return j;
}

std::string report_text(const AnalysisReport& r) {
  const Poset& p = r.poset;
  std::ostringstream out;
  out << "poset " << r.name << "  (n = " << p.size() << ")\n";
  out << "elements:";
  for (const auto& l : p.labels()) out << ' ' << l;
  out << '\n';
  out << "least: " << (p.least() ? p.label(*p.least()) : "-")
      << "   greatest: " << (p.greatest() ? p.label(*p.greatest()) : "-") << "\n\n";

  auto print_family = [&](const char* title, const std::vector<Subset>& sets,
                          const std::vector<int>& gens, bool ideals) {
    out << title << " (" << sets.size() << "):";
    for (std::size_t i = 0; i < sets.size(); ++i)
      out << ' '
          << (ideals ? principal_ideal_name(p, gens[i]) : principal_filter_name(p, gens[i]));
    out << '\n';
  };
  print_family("ideals", r.catalog.ideals, r.catalog.ideal_generators, true);
  print_family("filters", r.catalog.filters, r.catalog.filter_generators, false);

  auto print_selected = [&](const char* title, const std::vector<std::size_t>& idx, bool ideals) {
    out << title << ":";
    if (idx.empty()) out << " (none)";
    for (auto i : idx) {
      const int g = ideals ? r.catalog.ideal_generators[i] : r.catalog.filter_generators[i];
      out << ' ' << (ideals ? principal_ideal_name(p, g) : principal_filter_name(p, g));
    }
    out << '\n';
  };
  print_selected("prime ideals", r.catalog.prime_ideals, true);
  print_selected("prime filters", r.catalog.prime_filters, false);
  print_selected("ultrafilters", r.catalog.ultrafilters, false);
  out << '\n';

  if (r.star) {
    out << "pseudocomplemented: yes\n";
    // Two-row star table.
    std::vector<std::size_t> widths;
    for (int e = 0; e < p.size(); ++e)
      widths.push_back(std::max(p.label(e).size(), p.label(r.star->star(e)).size()));
    out << "  x  |";
    for (int e = 0; e < p.size(); ++e)
      out << ' ' << p.label(e) << std::string(widths[e] - p.label(e).size(), ' ');
    out << "\n  x* |";
    for (int e = 0; e < p.size(); ++e) {
      const auto& s = p.label(r.star->star(e));
      out << ' ' << s << std::string(widths[e] - s.size(), ' ');
    }
    out << '\n';
    out << "B(P) = " << r.boolean_elems->to_string() << '\n';
    out << "D(P) = " << r.dense_elems->to_string() << '\n';
    out << "*-ideals:";
    for (const auto& [ideal, witness] : r.star_ideals)
      out << ' ' << ideal.to_string() << " = " << witness.to_string() << "_*";
    out << '\n';
  } else {
    out << "pseudocomplemented: no";
    if (r.star_failure) {
      if (r.star_failure->element)
        out << "  (no pseudocomplement for " << p.label(*r.star_failure->element) << ")";
      else
        out << "  (no least element)";
    }
    out << '\n';
  }
  out << '\n';

  std::size_t passed = 0, failed = 0, na = 0;
  for (const auto& rep : r.theorems) {
    if (rep.status == CheckStatus::pass) ++passed;
    else if (rep.status == CheckStatus::fail) ++failed;
    else ++na;
  }
  out << "theorems: " << passed << " pass, " << failed << " fail, " << na
      << " not applicable\n";
  for (const auto& rep : r.theorems) {
    out << "  " << rep.theorem_id << std::string(rep.theorem_id.size() < 12 ? 12 - rep.theorem_id.size() : 1, ' ')
        << to_string(rep.status) << "  (" << rep.checked_instances << " instances)\n";
    if (rep.counterexample) {
      out << "    " << rep.counterexample->detail << '\n';
      for (const auto& [name, labels] : rep.counterexample->sets) {
        out << "    " << name << " = {";
        for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
        out << "}\n";
      }
      for (const auto& [name, label] : rep.counterexample->elements)
        out << "    " << name << " = " << label << '\n';
    }
  }
  return out.str();
}

}  // namespace posets
