#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "holovec/bsc.hpp"
#include "holovec/common.hpp"
#include "holovec/ga/multivector.hpp"
#include "holovec/hrr.hpp"
#include "holovec/vsa.hpp"

// JSON codecs for the file formats spoken by the CLI. Key order follows
// insertion order and numbers print in shortest round-trip form, so output
// is canonical: the same value always serializes to the same bytes.

namespace holovec::io {

using json = nlohmann::ordered_json;

// Canonical byte form: compact separators plus a trailing newline.
inline std::string dump(const json& value) { return value.dump() + "\n"; }

inline json parse(const std::string& text) {
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) throw ParseError("invalid JSON");
  return value;
}

inline json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

inline void save_file(const std::string& path, const json& value) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << dump(value);
}

namespace detail {
inline const json& field(const json& value, const char* key) {
  const auto it = value.find(key);
  if (it == value.end())
    throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}
}  // namespace detail

// {"n": 4, "terms": {"0110": 1.0, ...}}, blade keys leftmost-first.
inline json multivector_to_json(const ga::Multivector& a) {
  json terms = json::object();
  for (const auto& [mask, coeff] : a.terms())
    terms[ga::format_blade(ga::BladeMask{mask, a.dim()})] = coeff;
  return json{{"n", a.dim()}, {"terms", std::move(terms)}};
}

inline ga::Multivector multivector_from_json(const json& value) {
  const int n = detail::field(value, "n").get<int>();
  ga::Multivector::TermMap terms;
  for (const auto& [key, coeff] : detail::field(value, "terms").items()) {
    const ga::BladeMask mask = ga::parse_blade(key);
    if (mask.dim != n)
      throw ParseError("blade '" + key + "' does not have " +
                       std::to_string(n) + " bits");
    terms[mask.bits] = coeff.get<double>();
  }
  return ga::Multivector::from_terms(n, std::move(terms));
}

// {"n": 3, "values": [0.5, -1.0, 2.0]}
inline json tuple_to_json(const hrr::RealTuple& x) {
  return json{{"n", x.size()}, {"values", x}};
}

inline hrr::RealTuple tuple_from_json(const json& value) {
  const auto n = detail::field(value, "n").get<std::size_t>();
  auto values = detail::field(value, "values").get<hrr::RealTuple>();
  if (values.size() != n)
    throw ParseError("tuple declares n=" + std::to_string(n) + " but has " +
                     std::to_string(values.size()) + " values");
  if (values.empty()) throw ParseError("tuple must have n >= 1");
  return values;
}

// {"n": 8, "bits": "01011010"}; hex literals accepted on input.
inline json bitstring_to_json(const bsc::BitString& x) {
  return json{{"n", x.size()}, {"bits", x.to_string()}};
}

inline bsc::BitString bitstring_from_json(const json& value) {
  const int n = detail::field(value, "n").get<int>();
  return bsc::BitString::parse(detail::field(value, "bits").get<std::string>(),
                               n);
}

inline json trace_to_json(const vsa::Trace& trace) {
  if (const auto* mv = std::get_if<ga::Multivector>(&trace))
    return multivector_to_json(*mv);
  if (const auto* tuple = std::get_if<hrr::RealTuple>(&trace))
    return tuple_to_json(*tuple);
  return bitstring_to_json(std::get<bsc::BitString>(trace));
}

// Trace payloads are self-describing through their payload key.
inline vsa::Trace trace_from_json(const json& value) {
  if (value.contains("terms")) return multivector_from_json(value);
  if (value.contains("values")) return tuple_from_json(value);
  if (value.contains("bits")) return bitstring_from_json(value);
  throw ParseError("expected one of 'terms', 'values', 'bits'");
}

inline vsa::BackendKind trace_kind(const vsa::Trace& trace) {
  if (std::holds_alternative<ga::Multivector>(trace))
    return vsa::BackendKind::ga;
  if (std::holds_alternative<hrr::RealTuple>(trace))
    return vsa::BackendKind::hrr;
  return vsa::BackendKind::bsc;
}

namespace detail {

inline json item_to_json(const vsa::Item& item) {
  if (const auto* blade = std::get_if<ga::BladeMask>(&item))
    return ga::format_blade(*blade);
  if (const auto* tuple = std::get_if<hrr::RealTuple>(&item)) return *tuple;
  return std::get<bsc::BitString>(item).to_string();
}

inline vsa::Item item_from_json(const json& value,
                                const vsa::Backend& backend) {
  switch (backend.kind) {
    case vsa::BackendKind::ga: {
      const ga::BladeMask mask = ga::parse_blade(value.get<std::string>());
      if (mask.dim != backend.n)
        throw ParseError("vocabulary blade does not have n bits");
      return mask;
    }
    case vsa::BackendKind::hrr: {
      auto tuple = value.get<hrr::RealTuple>();
      if (tuple.size() != static_cast<std::size_t>(backend.n))
        throw ParseError("vocabulary tuple does not have n values");
      return tuple;
    }
    case vsa::BackendKind::bsc:
      return bsc::BitString::parse(value.get<std::string>(), backend.n);
  }
  throw ParseError("unreachable backend kind");
}

}  // namespace detail

// {"backend":"ga","n":4,"k":2,"roles":{...},"fillers":{...}}; the "k" key
// appears only for the ga backend.
inline json vocabulary_to_json(const vsa::Vocabulary& voc) {
  json out{{"backend", vsa::to_string(voc.backend.kind)},
           {"n", voc.backend.n}};
  if (voc.backend.kind == vsa::BackendKind::ga) out["k"] = voc.backend.k;
  json roles = json::object();
  for (const auto& [name, item] : voc.roles)
    roles[name] = detail::item_to_json(item);
  json fillers = json::object();
  for (const auto& [name, item] : voc.fillers)
    fillers[name] = detail::item_to_json(item);
  out["roles"] = std::move(roles);
  out["fillers"] = std::move(fillers);
  return out;
}

inline vsa::Vocabulary vocabulary_from_json(const json& value) {
  vsa::Vocabulary voc;
  voc.backend.kind =
      vsa::parse_backend(detail::field(value, "backend").get<std::string>());
  voc.backend.n = detail::field(value, "n").get<int>();
  if (voc.backend.kind == vsa::BackendKind::ga)
    voc.backend.k = value.contains("k") ? value["k"].get<int>()
                                        : voc.backend.n;
  vsa::validate(voc.backend);
  for (const auto& [name, item] : detail::field(value, "roles").items())
    voc.roles.emplace_back(name, detail::item_from_json(item, voc.backend));
  for (const auto& [name, item] : detail::field(value, "fillers").items()) {
    vsa::Item parsed = detail::item_from_json(item, voc.backend);
    if (voc.backend.kind == vsa::BackendKind::ga) {
      const auto& mask = std::get<ga::BladeMask>(parsed);
      if (voc.backend.k < 64 && (mask.bits >> voc.backend.k) != 0)
        throw ParseError("filler '" + name + "' has bits above k");
    }
    voc.fillers.emplace_back(name, std::move(parsed));
  }
  if (voc.roles.empty() || voc.fillers.empty())
    throw ParseError("vocabulary needs at least one role and one filler");
  return voc;
}

// {"pairs":[{"role":"name","filler":"Pat","weight":1.0}]}
inline json record_to_json(const vsa::Record& rec) {
  json pairs = json::array();
  for (const auto& pair : rec.pairs)
    pairs.push_back(json{{"role", pair.role},
                         {"filler", pair.filler},
                         {"weight", pair.weight}});
  return json{{"pairs", std::move(pairs)}};
}

inline vsa::Record record_from_json(const json& value) {
  vsa::Record rec;
  for (const auto& entry : detail::field(value, "pairs")) {
    vsa::RecordPair pair;
    pair.role = detail::field(entry, "role").get<std::string>();
    pair.filler = detail::field(entry, "filler").get<std::string>();
    if (entry.contains("weight")) pair.weight = entry["weight"].get<double>();
    rec.pairs.push_back(std::move(pair));
  }
  return rec;
}

}  // namespace holovec::io
