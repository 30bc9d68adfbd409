#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planegerm/json_io.hpp"
#include "planegerm/judge.hpp"
#include "planegerm/normalizer.hpp"

namespace planegerm {

struct CertEntry {
  std::string predicate;
  std::string value;
  bool holds = false;
  int sign = 0;
};

struct SpecifiedJetResult {
  SpecifiedJet cls = SpecifiedJet::Regular;
  bool in_scope = true;
  std::string reason;
  int det_sign = 0;  // sign of det H_lambda(0), used for lips/beaks
  bool swapped = false;
  std::vector<CertEntry> certificate;
  std::vector<std::string> trace;
};

inline const std::string kOutOfScope = "out_of_scope";

struct Classification {
  std::string label;  // kOutOfScope when outside the list
  std::string reason;
  std::string specified_jet;
  int codimension = -1;
  std::vector<CertEntry> certificate;
  std::vector<std::string> trace;
  std::vector<std::pair<std::string, std::string>> moduli;
  std::vector<std::string> flags;

  bool in_scope() const { return label != kOutOfScope; }
  bool has_flag(const std::string& f) const;
  const CertEntry* find(const std::string& predicate) const;
};

// All labels of the A-classification list, in table order.
const std::vector<std::string>& all_labels();
int codimension_of(const std::string& label);

template <class K>
SpecifiedJetResult classify_specified_jet(const JetMap<K>& f, Judge<K>& judge);
template <class K>
Classification classify(const JetMap<K>& f, Judge<K>& judge);

SpecifiedJetResult classify_specified_jet(const PlaneGermJet& f);
Classification classify(const PlaneGermJet& f);

// Walks the decision tree using only the recorded predicate outcomes.
std::string replay_certificate(const Classification& c);

// k with g of type A_k at 0, or nullopt when no A_k shows up within the order.
std::optional<int> ak_type_of_function(const Jet2& g);
bool crosscheck_4k(const PlaneGermJet& f);

json to_json(const Classification& c);
std::string to_text(const Classification& c);

}  // namespace planegerm
