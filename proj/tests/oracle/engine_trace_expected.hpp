// Generated by tests/oracle/engine_trace.py. Do not edit.
#pragma once

#include "oracle/engine_trace_types.hpp"

namespace oracle {

inline const std::vector<Record>& records() {
  static const std::vector<Record> r = {
      {1, "A", "B", 0x1.8000000000000p-1, 0x1.4666666666666p+3},
      {1, "A", "B", 0x1.0000000000000p-2, 0x1.8cccccccccccdp+1},
      {1, "C", "B", 0x1.0000000000000p+0, 0x1.0000000000000p+2},
      {1, "B", "C", 0x0.0p+0, 0x1.d333333333333p+2},
      {1, "D", "E", std::nullopt, 0x1.4cccccccccccdp+1},
      {1, "E", "A", 0x1.0000000000000p-1, 0x1.3d70a3d70a3d7p+0},
      {2, "A", "C", 0x1.0000000000000p+0, 0x1.8000000000000p+3},
      {2, "B", "A", 0x1.999999999999ap-4, 0x1.4000000000000p+2},
      {2, "C", "D", 0x1.0000000000000p-1, 0x1.7ae147ae147aep-1},
      {2, "D", "B", std::nullopt, 0x1.3cccccccccccdp+3},
      {2, "D", "B", 0x1.ccccccccccccdp-1, 0x1.199999999999ap+0},
      {2, "E", "C", 0x0.0p+0, 0x1.4000000000000p+4},
      {3, "B", "E", 0x1.8000000000000p-1, 0x1.8000000000000p+2},
      {3, "C", "E", 0x1.0000000000000p+0, 0x1.8000000000000p+2},
      {3, "A", "D", 0x1.0000000000000p-2, 0x1.e000000000000p+1},
      {3, "E", "D", 0x1.0000000000000p-1, 0x1.0000000000000p-2},
  };
  return r;
}

inline const std::vector<Trace>& traces() {
  static const std::vector<Trace> t = {
      {"weighted_aggregated_downrated", liquidrank::RatingMode::explicit_weighted,
       {0x1.999999999999ap-2, 0x1.3333333333333p-2, 0x1.999999999999ap-4, 0x1.3333333333333p-1, 0x1.0000000000000p-1, true, true, true, false, true, true, true, 1},
       {
           {{{"A", 0x1.049262e087220p-4}, {"B", 0x1.2638b59788118p-1}, {"C", -0x1.ed3521a98c332p-2}, {"E", 0x1.297b66ab21708p-3}},
            {{"A", 0x1.084baa571fc02p-1}, {"B", 0x1.0000000000000p+0}, {"C", 0x0.0p+0}, {"E", 0x1.2fdde44682d6ep-1}},
            {{"A", 0x1.ece4cfc1a754ap-2}, {"B", 0x1.a3d70a3d70a3dp-1}, {"C", 0x1.eb851eb851eb8p-4}, {"E", 0x1.1225906ecc3a4p-1}},
            {{"A", 0x1.2c8b84ecb733ap-1}, {"B", 0x1.0000000000000p+0}, {"C", 0x1.2bb512bb512bbp-3}, {"E", 0x1.4e5345fdc0dcfp-1}}},
           {{{"A", -0x1.3fea74060eceap-1}, {"B", 0x1.e3652d7e28658p-2}, {"C", -0x1.dc33c345cee54p-3}, {"D", 0x1.e12d9779b47ccp-7}},
            {{"A", 0x0.0p+0}, {"B", 0x1.0000000000000p+0}, {"C", 0x1.6e3dc73306396p-2}, {"D", 0x1.2a82268409095p-1}},
            {{"A", 0x1.68a76c4f423dfp-3}, {"B", 0x1.0000000000000p+0}, {"C", 0x1.2d5334a636eebp-2}, {"D", 0x1.0e655866aa2a6p-1}, {"E", 0x1.104671acbb65dp-2}},
            {{"A", 0x1.68a76c4f423dfp-3}, {"B", 0x1.0000000000000p+0}, {"C", 0x1.2d5334a636eebp-2}, {"D", 0x1.0e655866aa2a6p-1}, {"E", 0x1.104671acbb65dp-2}}},
           {{{"D", 0x1.b522cebfd243ep-6}, {"E", 0x1.12071aa199b80p+0}},
            {{"D", 0x0.0p+0}, {"E", 0x1.0000000000000p+0}},
            {{"A", 0x1.f71cc61b1343ep-4}, {"B", 0x1.7ae147ae147aep-2}, {"C", 0x1.4427aef316b82p-3}, {"D", 0x1.44799d47ff661p-3}, {"E", 0x1.8f3dc4404f4f4p-1}},
            {{"A", 0x1.429a961c2c4adp-3}, {"B", 0x1.e5e3566d5ca04p-2}, {"C", 0x1.9fb4f9a4b3aafp-3}, {"D", 0x1.a01e0bcf0291ap-3}, {"E", 0x1.0000000000000p+0}}},
       }},
      {"implicit_log_ranks_max_norm", liquidrank::RatingMode::implicit_financial,
       {0x1.0000000000000p-1, 0x1.3333333333333p-1, 0x0.0p+0, 0x1.0000000000000p-1, 0x1.0000000000000p+0, false, false, true, true, false, false, false, 1},
       {
           {{{"A", 0x1.0000000000000p-1}, {"B", 0x1.1000000000000p+3}, {"C", 0x1.c000000000000p+1}, {"E", 0x1.8000000000000p+0}},
            {{"A", 0x1.70da0146c0a1bp-3}, {"B", 0x1.0000000000000p+0}, {"C", 0x1.5610953a71f49p-1}, {"E", 0x1.a0c659e27c54fp-2}},
            {{"A", 0x1.7cf866a7c0205p-2}, {"B", 0x1.6666666666666p-1}, {"C", 0x1.226d087dc72eap-1}, {"E", 0x1.d9e8f0c0fe886p-2}},
            {{"A", 0x1.101f24c0f6f28p-1}, {"B", 0x1.0000000000000p+0}, {"C", 0x1.9ee4e78f1c8bcp-1}, {"E", 0x1.5281d089da617p-1}}},
           {{{"A", 0x1.4000000000000p+2}, {"B", 0x1.6000000000000p+2}, {"C", 0x1.399cd01e8517ep+4}, {"D", 0x1.9ee4e78f1c8bcp-1}},
            {{"A", 0x1.2f3bc02a5ded0p-1}, {"B", 0x1.3cc7973bb956bp-1}, {"C", 0x1.0000000000000p+0}, {"D", 0x1.91c7ce0d5506cp-3}},
            {{"A", 0x1.1c90fc84b9bd2p-1}, {"B", 0x1.b1e96fb17d55ep-1}, {"C", 0x1.c5bc8aef77871p-1}, {"D", 0x1.838e5c6911016p-2}, {"E", 0x1.963560a56c74fp-2}},
            {{"A", 0x1.411b6585cc00cp-1}, {"B", 0x1.e9a135460b876p-1}, {"C", 0x1.0000000000000p+0}, {"D", 0x1.b5524d717c44fp-2}, {"E", 0x1.ca5e7874ced3dp-2}}},
           {{{"D", 0x1.411b6585cc00cp+1}, {"E", 0x1.779c73fa4452cp+3}},
            {{"D", 0x1.f922ae7ad75edp-2}, {"E", 0x1.0000000000000p+0}},
            {{"A", 0x1.8154136d5b341p-2}, {"B", 0x1.25c71ff6d3b7ap-1}, {"C", 0x1.3333333333333p-1}, {"D", 0x1.d0727442071c1p-2}, {"E", 0x1.564f8a89713f9p-1}},
            {{"A", 0x1.202bd18f3bf68p-1}, {"B", 0x1.b768965a8c0aep-1}, {"C", 0x1.cb7bfbdf2d043p-1}, {"D", 0x1.5b573aaa3b988p-1}, {"E", 0x1.0000000000000p+0}}},
       }},
      {"unweighted_not_liquid", liquidrank::RatingMode::explicit_unweighted,
       {0x1.0000000000000p-1, 0x1.0000000000000p-1, 0x1.999999999999ap-3, 0x0.0p+0, 0x1.47ae147ae147bp-7, false, true, false, false, false, false, true, 1},
       {
           {{{"A", 0x1.5555555555555p-2}, {"B", 0x1.aaaaaaaaaaaaap+0}, {"C", -0x1.0000000000000p+0}, {"E", -0x1.0000000000000p+0}},
            {{"A", 0x1.0000000000000p-1}, {"B", 0x1.0000000000000p+0}, {"C", 0x0.0p+0}, {"E", 0x0.0p+0}},
            {{"A", 0x1.0000000000000p-1}, {"B", 0x1.8000000000000p-1}, {"C", 0x1.0000000000000p-2}, {"E", 0x1.0000000000000p-2}},
            {{"A", 0x1.5555555555555p-1}, {"B", 0x1.0000000000000p+0}, {"C", 0x1.5555555555555p-2}, {"E", 0x1.5555555555555p-2}}},
           {{{"A", -0x1.3333333333333p-1}, {"B", -0x1.1111111111110p-3}, {"C", 0x0.0p+0}, {"D", 0x1.5555555555555p-2}},
            {{"A", 0x0.0p+0}, {"B", 0x1.0000000000000p-1}, {"C", 0x1.4924924924924p-1}, {"D", 0x1.0000000000000p+0}},
            {{"A", 0x1.5555555555555p-2}, {"B", 0x1.8000000000000p-1}, {"C", 0x1.f3cf3cf3cf3cep-2}, {"D", 0x1.8000000000000p-1}, {"E", 0x1.1111111111111p-2}},
            {{"A", 0x1.c71c71c71c71cp-2}, {"B", 0x1.0000000000000p+0}, {"C", 0x1.4d34d34d34d34p-1}, {"D", 0x1.0000000000000p+0}, {"E", 0x1.6c16c16c16c17p-2}}},
           {{{"D", 0x1.5555555555555p-2}, {"E", 0x1.aaaaaaaaaaaaap+0}},
            {{"D", 0x0.0p+0}, {"E", 0x1.0000000000000p+0}},
            {{"A", 0x1.49f49f49f49f4p-2}, {"B", 0x1.3333333333333p-1}, {"C", 0x1.b39b39b39b39ap-2}, {"D", 0x1.0000000000000p-1}, {"E", 0x1.5b05b05b05b06p-1}},
            {{"A", 0x1.e6d1d60864b89p-2}, {"B", 0x1.c53ef368eb042p-1}, {"C", 0x1.41595488b1761p-1}, {"D", 0x1.79b47582192e2p-1}, {"E", 0x1.0000000000000p+0}}},
       }},
  };
  return t;
}

}  // namespace oracle
