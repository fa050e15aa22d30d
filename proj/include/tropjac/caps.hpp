#pragma once

namespace tropjac {

// Hard limits for the exponential scans. TROPIJAC_CAP, when set, overrides
// both subset-scan caps.
struct Caps {
  int vertex_scan = 20;   // max |V| for 2^|V| beta scans
  int edge_scan = 16;     // max |E| for 2^|E| enumerations
  int automorphism = 8;   // max |V| for automorphism search

  static Caps effective();
};

}  // namespace tropjac
