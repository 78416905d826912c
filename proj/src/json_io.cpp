#include "magic/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "magic/errors.hpp"

namespace magic {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

TraceOp op_from(const std::string& s) {
  for (TraceOp op : {TraceOp::Assign, TraceOp::Fold, TraceOp::Merge, TraceOp::Add,
                     TraceOp::Complement, TraceOp::Note}) {
    if (to_string(op) == s) return op;
  }
  throw InvalidInput("unknown trace op: " + s);
}

Space space_from(const std::string& s) {
  if (s == to_string(Space::Graph)) return Space::Graph;
  if (s == to_string(Space::Doubled)) return Space::Doubled;
  throw InvalidInput("unknown trace space: " + s);
}

json step_to_json(const TraceStep& s) {
  json j;
  j["rule"] = s.rule;
  j["op"] = to_string(s.op);
  j["params"] = s.params;
  if (s.op == TraceOp::Assign) {
    j["space"] = to_string(s.space);
    j["factors"] = s.factors;
    j["values"] = s.values;
  }
  if (s.op == TraceOp::Fold) {
    j["divisor"] = s.divisor;
    j["offset"] = s.offset;
  }
  return j;
}

TraceStep step_from_json(const json& j) {
  TraceStep s;
  s.rule = j.at("rule").get<std::string>();
  s.op = op_from(j.at("op").get<std::string>());
  if (j.contains("params")) s.params = j.at("params").get<std::map<std::string, Label>>();
  if (j.contains("space")) s.space = space_from(j.at("space").get<std::string>());
  if (j.contains("factors")) s.factors = j.at("factors").get<std::vector<EdgeSet>>();
  if (j.contains("values")) s.values = j.at("values").get<std::vector<Label>>();
  if (j.contains("divisor")) s.divisor = j.at("divisor").get<int>();
  if (j.contains("offset")) s.offset = j.at("offset").get<Label>();
  return s;
}

}  // namespace

std::string labeling_to_json(const LabelingFile& file) {
  json j;
  j["k"] = file.k;
  j["c"] = file.c;
  json labels = json::object();
  for (std::size_t e = 0; e < file.labeling.labels.size(); ++e) {
    labels[std::to_string(e)] = file.labeling.labels[e];
  }
  j["labels"] = labels;
  json trace = json::array();
  for (const auto& s : file.trace.steps) trace.push_back(step_to_json(s));
  j["trace"] = trace;
  return dump(j);
}

LabelingFile labeling_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    LabelingFile f;
    f.k = j.at("k").get<std::int64_t>();
    f.c = j.at("c").get<Label>();
    f.labeling.k = f.k;
    const auto& labels = j.at("labels");
    if (!labels.is_object()) throw InvalidInput("labels must be an object");
    f.labeling.labels.assign(labels.size(), 0);
    std::vector<char> seen(labels.size(), 0);
    for (const auto& [key, value] : labels.items()) {
      std::size_t pos = 0;
      long id = -1;
      try {
        id = std::stol(key, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != key.size() || id < 0 || id >= static_cast<long>(labels.size()) || seen[id]) {
        throw InvalidInput("bad edge id in labels: " + key);
      }
      seen[id] = 1;
      f.labeling.labels[id] = value.get<Label>();
    }
    if (j.contains("trace")) {
      for (const auto& s : j.at("trace")) f.trace.steps.push_back(step_from_json(s));
    }
    return f;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed labeling file: ") + e.what());
  }
}

LabelingFile read_labeling_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return labeling_from_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::string spectrum_to_json(const SpectrumSet& s) {
  json j;
  j["k"] = s.k;
  if (s.symbolic) {
    j["symbolic"] = to_string(*s.symbolic);
  } else {
    j["spectrum"] = s.residues;
  }
  j["complete"] = s.complete();
  j["provenance"] = s.provenance;
  j["undecided"] = s.undecided;
  return dump(j);
}

SpectrumSet spectrum_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    SpectrumSet s;
    s.k = j.at("k").get<std::int64_t>();
    if (j.contains("symbolic")) {
      const auto tag = j.at("symbolic").get<std::string>();
      for (auto t : {SymbolicSpectrum::Integers, SymbolicSpectrum::NonzeroIntegers,
                     SymbolicSpectrum::EvenIntegers, SymbolicSpectrum::NonzeroEvenIntegers}) {
        if (to_string(t) == tag) s.symbolic = t;
      }
      if (!s.symbolic) throw InvalidInput("unknown symbolic spectrum: " + tag);
    } else {
      s.residues = j.at("spectrum").get<std::vector<Label>>();
    }
    s.provenance = j.value("provenance", std::vector<std::string>{});
    s.undecided = j.value("undecided", std::vector<Label>{});
    return s;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed spectrum report: ") + e.what());
  }
}

std::string factors_to_json(const FactorDecomposition& f) {
  json j;
  j["parts"] = f.parts;
  j["degrees"] = f.degrees;
  return dump(j);
}

FactorDecomposition factors_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    FactorDecomposition f;
    f.parts = j.at("parts").get<std::vector<EdgeSet>>();
    f.degrees = j.at("degrees").get<std::vector<int>>();
    return f;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed factor decomposition: ") + e.what());
  }
}

}  // namespace magic
