// Copyright 2026 The gapr Authors
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

#include "gapr/report.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gapr/errors.h"
#include "gapr/stats.h"
#include "gapr/surrogate.h"

namespace gapr {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// JSON has no infinities; non-finite numbers travel as strings.
ordered_json Num(double v) {
  if (std::isfinite(v)) return v;
  return FormatDouble(v);
}

double NumFrom(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw FormatError("expected a number");
}

ordered_json Opt(const std::optional<double>& v) {
  return v ? Num(*v) : ordered_json(nullptr);
}

std::optional<double> OptFrom(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return NumFrom(j[key]);
}

}  // namespace

RunSummary Summarize(const std::string& name, const std::string& instance_digest,
                     const GaprInstance& inst, const Dataset& data,
                     const TrainReport& report, std::optional<double> opt) {
  RunSummary s;
  s.name = name;
  s.instance_digest = instance_digest;
  s.dataset_instance_digest = data.meta.instance_digest;
  s.tasks = inst.task_count();
  s.agents = inst.agent_count();
  s.n = data.size();
  s.objective = report.best_objective;
  s.plan_from_samples = report.best_plan_from_samples;
  s.stop_reason = StopReasonName(report.stop_reason);
  s.avg_sample_seconds = report.avg_sample_seconds;
  s.train_seconds = report.train_seconds;
  s.min_sample = data.MinValue();
  s.opt = opt;
  s.sample_values = data.values;
  s.gap = std::numeric_limits<double>::quiet_NaN();
  for (const IterationLog& it : report.iterations) {
    if (!it.accepted) continue;
    s.accepted_z.push_back(it.z);
    // The last accepted iteration produced z*.
    s.nodes = it.mip_nodes;
    s.rows = it.program_rows;
    s.cols = it.program_cols;
    s.gap = it.mip_gap;
    s.time_mip = it.mip_seconds;
  }
  if (!report.best_subsets.empty() && data.size() >= 3) {
    try {
      const SetIndicatorModel model(inst, report.best_subsets, report.best_beta);
      std::vector<double> predicted;
      for (const AssignmentPlan& p : data.plans) predicted.push_back(EvaluateL(p, model));
      const BivariateFit fit = FitBivariate(data.values, predicted);
      s.rho = fit.rho;
      s.expected_objective =
          ConditionalExpectation(fit, EvaluateL(report.best_plan, model));
    } catch (const Error&) {
      // Constant predictions leave the fit undefined; report nothing.
    }
  }
  return s;
}

std::string SummaryToJson(const RunSummary& s) {
  ordered_json j;
  j["format"] = "gapr-run-summary";
  j["format_version"] = kFormatVersion;
  j["name"] = s.name;
  j["instance_digest"] = s.instance_digest;
  j["dataset_instance_digest"] = s.dataset_instance_digest;
  j["tasks"] = s.tasks;
  j["agents"] = s.agents;
  j["n"] = s.n;
  j["objective"] = Num(s.objective);
  j["plan_from_samples"] = s.plan_from_samples;
  j["stop_reason"] = s.stop_reason;
  j["nodes"] = s.nodes;
  j["rows"] = s.rows;
  j["cols"] = s.cols;
  j["gap"] = Num(s.gap);
  j["time_mip"] = s.time_mip;
  j["avg_sample_seconds"] = s.avg_sample_seconds;
  j["train_seconds"] = s.train_seconds;
  j["min_sample"] = Num(s.min_sample);
  j["opt"] = Opt(s.opt);
  j["rho"] = Opt(s.rho);
  j["expected_objective"] = Opt(s.expected_objective);
  j["sample_values"] = s.sample_values;
  j["accepted_z"] = s.accepted_z;
  return j.dump(2) + "\n";
}

RunSummary SummaryFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("run summary: ") + e.what());
  }
  if (j.value("format", "") != "gapr-run-summary") throw FormatError("not a run summary");
  RunSummary s;
  try {
    s.name = j.at("name").get<std::string>();
    s.instance_digest = j.at("instance_digest").get<std::string>();
    s.dataset_instance_digest = j.at("dataset_instance_digest").get<std::string>();
    s.tasks = j.at("tasks").get<int>();
    s.agents = j.at("agents").get<int>();
    s.n = j.at("n").get<int>();
    s.objective = NumFrom(j.at("objective"));
    s.plan_from_samples = j.at("plan_from_samples").get<bool>();
    s.stop_reason = j.at("stop_reason").get<std::string>();
    s.nodes = j.at("nodes").get<long>();
    s.rows = j.at("rows").get<int>();
    s.cols = j.at("cols").get<int>();
    s.gap = NumFrom(j.at("gap"));
    s.time_mip = j.at("time_mip").get<double>();
    s.avg_sample_seconds = j.at("avg_sample_seconds").get<double>();
    s.train_seconds = j.at("train_seconds").get<double>();
    s.min_sample = NumFrom(j.at("min_sample"));
    s.opt = OptFrom(j, "opt");
    s.rho = OptFrom(j, "rho");
    s.expected_objective = OptFrom(j, "expected_objective");
    s.sample_values = j.at("sample_values").get<std::vector<double>>();
    s.accepted_z = j.at("accepted_z").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("run summary: ") + e.what());
  }
  return s;
}

std::string ReportCsv(std::span<const RunSummary> runs) {
  std::ostringstream out;
  out << "run,instance_digest,tasks,agents,n,obj,nodes,rows,cols,gap,time_mip,"
         "time_total,min_sample,opt,obj_over_min_sample,obj_over_opt,"
         "stop_reason,rho,expected_obj,obj_minus_expected\n";
  auto opt = [](const std::optional<double>& v) {
    return v ? FormatDouble(*v) : std::string();
  };
  for (const RunSummary& r : runs) {
    std::optional<double> ratio_opt;
    if (r.opt && *r.opt != 0.0) ratio_opt = r.objective / *r.opt;
    std::optional<double> deviation;
    if (r.expected_objective) deviation = r.objective - *r.expected_objective;
    out << r.name << ',' << r.instance_digest << ',' << r.tasks << ','
        << r.agents << ',' << r.n << ',' << FormatDouble(r.objective) << ','
        << r.nodes << ',' << r.rows << ',' << r.cols << ',' << FormatDouble(r.gap)
        << ',' << FormatDouble(r.time_mip) << ',' << FormatDouble(r.time_total())
        << ',' << FormatDouble(r.min_sample) << ',' << opt(r.opt) << ','
        << (r.min_sample != 0.0 ? FormatDouble(r.objective / r.min_sample) : "")
        << ',' << opt(ratio_opt) << ',' << r.stop_reason << ',' << opt(r.rho)
        << ',' << opt(r.expected_objective) << ',' << opt(deviation) << '\n';
  }
  return out.str();
}

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 360;
constexpr double kMargin = 40;

std::string SvgOpen(const std::string& title) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kMargin << "\" y=\"20\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << title << "</text>\n";
  return out.str();
}

}  // namespace

std::string SampleHistogramSvg(const RunSummary& run) {
  std::ostringstream out;
  out << SvgOpen("Sampled objective values: " + run.name);
  if (run.sample_values.empty()) return out.str() + "</svg>\n";
  double lo = *std::min_element(run.sample_values.begin(), run.sample_values.end());
  double hi = *std::max_element(run.sample_values.begin(), run.sample_values.end());
  if (std::isfinite(run.objective)) lo = std::min(lo, run.objective);
  if (run.opt) lo = std::min(lo, *run.opt);
  if (hi <= lo) hi = lo + 1.0;
  const int bins = std::max(4, SturgesBins(static_cast<int>(run.sample_values.size())));
  std::vector<int> counts(bins, 0);
  for (double v : run.sample_values) {
    const int b = std::min(bins - 1, static_cast<int>((v - lo) / (hi - lo) * bins));
    ++counts[b];
  }
  const int peak = *std::max_element(counts.begin(), counts.end());
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  const double bar_w = plot_w / bins;
  for (int b = 0; b < bins; ++b) {
    const double h = plot_h * counts[b] / std::max(1, peak);
    out << "<rect x=\"" << kMargin + b * bar_w << "\" y=\""
        << kHeight - kMargin - h << "\" width=\"" << bar_w - 1 << "\" height=\""
        << h << "\" fill=\"#8aa8c8\"/>\n";
  }
  auto marker = [&](double v, const char* color, const char* label) {
    const double x = kMargin + (v - lo) / (hi - lo) * plot_w;
    out << "<line x1=\"" << x << "\" y1=\"" << kMargin << "\" x2=\"" << x
        << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << x + 3 << "\" y=\"" << kMargin + 12
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << color
        << "\">" << label << "</text>\n";
  };
  if (std::isfinite(run.objective)) marker(run.objective, "#c03030", "z*");
  if (run.opt) marker(*run.opt, "#208020", "opt");
  out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - 12
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << FormatDouble(lo)
      << " .. " << FormatDouble(hi) << "</text>\n</svg>\n";
  return out.str();
}

std::string ObjectiveCurveSvg(const RunSummary& run) {
  std::ostringstream out;
  out << SvgOpen("Surrogate objective per accepted iteration: " + run.name);
  std::vector<double> ys = run.accepted_z;
  if (ys.empty() || !std::isfinite(run.min_sample)) return out.str() + "</svg>\n";
  double lo = std::min(run.min_sample, *std::min_element(ys.begin(), ys.end()));
  double hi = std::max(run.min_sample, *std::max_element(ys.begin(), ys.end()));
  if (hi <= lo) hi = lo + 1.0;
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  auto y_of = [&](double v) { return kHeight - kMargin - (v - lo) / (hi - lo) * plot_h; };
  const double step = ys.size() > 1 ? plot_w / (ys.size() - 1) : 0.0;
  out << "<polyline fill=\"none\" stroke=\"#c03030\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < ys.size(); ++k) {
    out << kMargin + k * step << ',' << y_of(ys[k]) << ' ';
  }
  out << "\"/>\n<line x1=\"" << kMargin << "\" x2=\"" << kWidth - kMargin
      << "\" y1=\"" << y_of(run.min_sample) << "\" y2=\"" << y_of(run.min_sample)
      << "\" stroke=\"#4060a0\" stroke-dasharray=\"6,4\"/>\n"
      << "<text x=\"" << kMargin << "\" y=\"" << kHeight - 12
      << "\" font-family=\"sans-serif\" font-size=\"11\">dashed: min sample "
      << FormatDouble(run.min_sample) << "</text>\n</svg>\n";
  return out.str();
}

}  // namespace gapr
