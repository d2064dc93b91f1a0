#pragma once

// Automorphism tables for the indecomposable real Lie algebras of dimension
// 2, 3 and 4, and the special five-dimensional family A_{5,17}.
//
// Entry fields:
//   brackets    nonzero c_ij^k (i<j); "c" is an expression in the parameters
//   discrete    notation strings, or keys of "generators" (explicit matrices)
//   outer       Weyl-basis generators; [..]_u marks a range-restricted one
//   block       block-diagonal pattern, or "family" naming a matrix template
//   cases       parameter-dependent additions (discrete) or family replacement
//   grid        parameter points used for verification
//   probes      explicit generator checks with the expected outcome

namespace liealg::detail {

inline constexpr const char* kCatalogJson = R"json(
{
  "entries": [
    {
      "name": "A_{2,1}", "dim": 2,
      "brackets": [{"i": 1, "j": 2, "k": 1, "c": "1"}],
      "discrete": ["p1"], "block": "(1,1)"
    },
    {
      "name": "A_{3,1}", "note": "nilpotent", "dim": 3,
      "brackets": [{"i": 2, "j": 3, "k": 1, "c": "1"}],
      "discrete": ["p12"], "outer": ["E_1^1+E_2^2"], "block": "(1,S_{23})"
    },
    {
      "name": "A_{3,2}", "dim": 3,
      "brackets": [
        {"i": 1, "j": 3, "k": 1, "c": "1"},
        {"i": 2, "j": 3, "k": 1, "c": "1"},
        {"i": 2, "j": 3, "k": 2, "c": "1"}],
      "block": "(a,a,1)"
    },
    {
      "name": "A_{3,3}", "dim": 3,
      "brackets": [
        {"i": 1, "j": 3, "k": 1, "c": "1"},
        {"i": 2, "j": 3, "k": 2, "c": "1"}],
      "discrete": ["p1"], "block": "(S_{12},1)"
    },
    {
      "name": "A_{3,4}", "dim": 3,
      "brackets": [
        {"i": 1, "j": 3, "k": 1, "c": "1"},
        {"i": 2, "j": 3, "k": 2, "c": "-1"}],
      "discrete": ["(-X2,X1,-X3)"], "block": "(1,a,1)"
    },
    {
      "name": "A_{3,5}^u", "note": "0<|u|<1", "dim": 3,
      "params": ["u"], "constraints": ["0 < |u| < 1"],
      "brackets": [
        {"i": 1, "j": 3, "k": 1, "c": "1"},
        {"i": 2, "j": 3, "k": 2, "c": "u"}],
      "discrete": ["p1"], "block": "(1,a,1)",
      "grid": [{"u": "-1/2"}, {"u": "1/3"}, {"u": "9/10"}, {"u": "-9/10"}]
    },
    {
      "name": "A_{3,6}", "dim": 3,
      "brackets": [
        {"i": 1, "j": 3, "k": 2, "c": "-1"},
        {"i": 2, "j": 3, "k": 1, "c": "1"}],
      "discrete": ["p23"], "outer": ["E_1^1+E_2^2"], "block": "(1,1,1)"
    },
    {
      "name": "A_{3,7}^u", "note": "u>0", "dim": 3,
      "params": ["u"], "constraints": ["u > 0"],
      "brackets": [
        {"i": 1, "j": 3, "k": 1, "c": "u"},
        {"i": 2, "j": 3, "k": 2, "c": "u"},
        {"i": 1, "j": 3, "k": 2, "c": "-1"},
        {"i": 2, "j": 3, "k": 1, "c": "1"}],
      "outer": ["[E_1^1+E_2^2]_u"], "block": "(1,1,1)",
      "grid": [{"u": "1/10"}, {"u": "1"}, {"u": "3"}]
    },
    {
      "name": "A_{3,8}", "note": "sl(2,ℝ)", "dim": 3,
      "brackets": [
        {"i": 1, "j": 2, "k": 1, "c": "1"},
        {"i": 2, "j": 3, "k": 3, "c": "1"},
        {"i": 1, "j": 3, "k": 2, "c": "-2"}],
      "discrete": ["p13", "((-X3,-X2,-X1))"], "block": "(1,1,1)"
    },
    {
      "name": "A_{3,9}", "note": "so(3)", "dim": 3,
      "brackets": [
        {"i": 1, "j": 2, "k": 3, "c": "1"},
        {"i": 2, "j": 3, "k": 1, "c": "1"},
        {"i": 1, "j": 3, "k": 2, "c": "-1"}],
      "block": "(1,1,1)"
    },
    {
      "name": "A_{4,1}", "note": "nilpotent", "dim": 4,
      "brackets": [
        {"i": 2, "j": 4, "k": 1, "c": "1"},
        {"i": 3, "j": 4, "k": 2, "c": "1"}],
      "outer": ["E_3^1", "E_4^3"], "block": "(ab^2,ab,a,b)"
    },
    {
      "name": "A_{4,2}^u", "note": "u∉{0,1}", "dim": 4,
      "params": ["u"], "constraints": ["u != 0 && u != 1"],
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "u"},
        {"i": 2, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 3, "c": "1"}],
      "block": "(a,b,b,1)",
      "grid": [{"u": "-1"}, {"u": "1/2"}, {"u": "2"}]
    },
    {
      "name": "A_{4,2}^1", "dim": 4,
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "1"},
        {"i": 2, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 3, "c": "1"}],
      "outer": ["E_1^2", "E_3^1"], "block": "(a,b,b,1)"
    },
    {
      "name": "A_{4,3}", "dim": 4,
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "1"},
        {"i": 3, "j": 4, "k": 2, "c": "1"}],
      "outer": ["E_4^3"], "block": "(a,b,b,1)"
    },
    {
      "name": "A_{4,4}", "dim": 4,
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "1"},
        {"i": 2, "j": 4, "k": 1, "c": "1"},
        {"i": 2, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 3, "c": "1"}],
      "outer": ["E_3^1"], "block": "(a,a,a,1)"
    },
    {
      "name": "A_{4,5}^{u,v}", "note": "uv≠0, −1≤u<v<1", "dim": 4,
      "params": ["u", "v"], "constraints": ["u*v != 0 && -1 <= u < v < 1"],
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "1"},
        {"i": 2, "j": 4, "k": 2, "c": "u"},
        {"i": 3, "j": 4, "k": 3, "c": "v"}],
      "discrete": ["p1"], "block": "(1,a,b,1)",
      "grid": [
        {"u": "-1", "v": "-1/2"}, {"u": "-1", "v": "1/2"}, {"u": "-1/2", "v": "1/2"},
        {"u": "1/3", "v": "1/2"}, {"u": "-1", "v": "9/10"}]
    },
    {
      "name": "A_{4,5}^{u,u}", "note": "u≠0, −1≤u<1", "dim": 4,
      "params": ["u"], "constraints": ["u != 0 && -1 <= u < 1"],
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "1"},
        {"i": 2, "j": 4, "k": 2, "c": "u"},
        {"i": 3, "j": 4, "k": 3, "c": "u"}],
      "discrete": ["p1", "p2"], "outer": ["E_2^2"], "block": "(1,S_{23},1)",
      "grid": [{"u": "-1"}, {"u": "-1/2"}, {"u": "1/2"}]
    },
    {
      "name": "A_{4,5}^{u,1}", "note": "u≠0, −1≤u<1", "modified_basis": true, "dim": 4,
      "params": ["u"], "constraints": ["u != 0 && -1 <= u < 1"],
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "u"},
        {"i": 2, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 3, "c": "1"}],
      "discrete": ["p1", "p2"], "outer": ["E_2^2"], "block": "(1,S_{23},1)",
      "grid": [{"u": "-1"}, {"u": "-1/2"}, {"u": "1/2"}]
    },
    {
      "name": "A_{4,5}^{1,1}", "dim": 4,
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "1"},
        {"i": 2, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 3, "c": "1"}],
      "discrete": ["p1"], "block": "(S_{123},1)"
    },
    {
      "name": "A_{4,6}^{u,v}", "note": "u≠0, v≥0", "dim": 4,
      "params": ["u", "v"], "constraints": ["u != 0 && v >= 0"],
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "u"},
        {"i": 2, "j": 4, "k": 2, "c": "v"},
        {"i": 3, "j": 4, "k": 3, "c": "v"},
        {"i": 2, "j": 4, "k": 3, "c": "-1"},
        {"i": 3, "j": 4, "k": 2, "c": "1"}],
      "outer": ["[E_2^2+E_3^3]_v"], "block": "(a,1,1,1)",
      "grid": [{"u": "1", "v": "0"}, {"u": "-2", "v": "1/2"}, {"u": "1/2", "v": "3"}]
    },
    {
      "name": "A_{4,7}", "dim": 4,
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "2"},
        {"i": 2, "j": 3, "k": 1, "c": "1"},
        {"i": 2, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 3, "c": "1"}],
      "block": "(a^2,a,a,1)"
    },
    {
      "name": "A_{4,8}", "dim": 4,
      "brackets": [
        {"i": 2, "j": 3, "k": 1, "c": "1"},
        {"i": 2, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 3, "c": "-1"}],
      "discrete": ["p12", "(-X1,X3,X2,-X4)"], "outer": ["E_1^1+E_3^3", "E_4^1"], "block": "(1,1,1,1)"
    },
    {
      "name": "A_{4,9}^u", "note": "−1<u<1", "dim": 4,
      "params": ["u"], "constraints": ["-1 < u < 1"],
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "u+1"},
        {"i": 2, "j": 3, "k": 1, "c": "1"},
        {"i": 2, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 3, "c": "u"}],
      "discrete": ["p12"], "block": "(a,1,a,1)",
      "grid": [{"u": "-1/2"}, {"u": "0"}, {"u": "1/2"}, {"u": "9/10"}, {"u": "-9/10"}]
    },
    {
      "name": "A_{4,9}^1", "dim": 4,
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "2"},
        {"i": 2, "j": 3, "k": 1, "c": "1"},
        {"i": 2, "j": 4, "k": 2, "c": "1"},
        {"i": 3, "j": 4, "k": 3, "c": "1"}],
      "discrete": ["p12"], "block": "(1,S_{23},1)"
    },
    {
      "name": "A_{4,10}", "dim": 4,
      "brackets": [
        {"i": 2, "j": 3, "k": 1, "c": "1"},
        {"i": 3, "j": 4, "k": 2, "c": "1"},
        {"i": 2, "j": 4, "k": 3, "c": "-1"}],
      "discrete": ["p124"], "outer": ["2E_1^1+E_2^2+E_3^3", "E_4^1"], "block": "(1,1,1,1)"
    },
    {
      "name": "A_{4,11}^u", "note": "u>0", "dim": 4,
      "params": ["u"], "constraints": ["u > 0"],
      "brackets": [
        {"i": 1, "j": 4, "k": 1, "c": "2u"},
        {"i": 2, "j": 3, "k": 1, "c": "1"},
        {"i": 3, "j": 4, "k": 2, "c": "1"},
        {"i": 2, "j": 4, "k": 2, "c": "u"},
        {"i": 3, "j": 4, "k": 3, "c": "u"},
        {"i": 2, "j": 4, "k": 3, "c": "-1"}],
      "outer": ["[2E_1^1+E_2^2+E_3^3]_u"], "block": "(1,1,1,1)",
      "grid": [{"u": "1/2"}, {"u": "1"}, {"u": "2"}]
    },
    {
      "name": "A_{4,12}", "dim": 4,
      "brackets": [
        {"i": 1, "j": 3, "k": 1, "c": "1"},
        {"i": 2, "j": 3, "k": 2, "c": "1"},
        {"i": 2, "j": 4, "k": 1, "c": "1"},
        {"i": 1, "j": 4, "k": 2, "c": "-1"}],
      "discrete": ["p24"], "block": "(1,1,1,1)"
    },
    {
      "name": "A_{5,17}^{u,v,w}", "note": "w≠0", "dim": 5,
      "params": ["u", "v", "w"], "constraints": ["w != 0"],
      "brackets": [
        {"i": 1, "j": 5, "k": 1, "c": "u"},
        {"i": 2, "j": 5, "k": 2, "c": "u"},
        {"i": 3, "j": 5, "k": 3, "c": "v"},
        {"i": 4, "j": 5, "k": 4, "c": "v"},
        {"i": 1, "j": 5, "k": 2, "c": "-1"},
        {"i": 2, "j": 5, "k": 1, "c": "1"},
        {"i": 3, "j": 5, "k": 4, "c": "-w"},
        {"i": 4, "j": 5, "k": 3, "c": "w"}],
      "families": {
        "B1": [
          ["a", "b", "0", "0", "0"],
          ["-b", "a", "0", "0", "0"],
          ["0", "0", "g", "h", "0"],
          ["0", "0", "-h", "g", "0"],
          ["k1", "k2", "k3", "k4", "1"]],
        "B3": [
          ["a", "b", "c", "d", "0"],
          ["-b", "a", "-w*d", "w*c", "0"],
          ["e", "f", "g", "h", "0"],
          ["-w*f", "w*e", "-h", "g", "0"],
          ["k1", "k2", "k3", "k4", "1"]]
      },
      "generators": {
        "B2": [
          ["0", "0", "0", "w", "0"],
          ["0", "0", "1", "0", "0"],
          ["0", "w", "0", "0", "0"],
          ["1", "0", "0", "0", "0"],
          ["0", "0", "0", "0", "-1"]]
      },
      "family": "B1",
      "cases": [
        {"when": "u == v && |w| == 1", "family": "B3"},
        {"when": "u == -v && u != 0 && |w| == 1", "discrete": ["B2"]},
        {"when": "u == 0 && v == 0", "discrete": ["p245"]}
      ],
      "grid": [
        {"u": "2", "v": "3", "w": "5"}, {"u": "1", "v": "-1", "w": "1"}, {"u": "2", "v": "-2", "w": "-1"},
        {"u": "1", "v": "1", "w": "1"}, {"u": "0", "v": "0", "w": "2"}, {"u": "0", "v": "0", "w": "1"},
        {"u": "1", "v": "-2", "w": "1"}, {"u": "1", "v": "2", "w": "1"}, {"u": "1", "v": "1", "w": "2"},
        {"u": "0", "v": "0", "w": "-1"}, {"u": "-1/2", "v": "1/3", "w": "3/2"}],
      "probes": [
        {"params": {"u": "1", "v": "-1", "w": "1"}, "generator": "B2", "expect": true},
        {"params": {"u": "2", "v": "-2", "w": "-1"}, "generator": "B2", "expect": true},
        {"params": {"u": "1", "v": "-2", "w": "1"}, "generator": "B2", "expect": false},
        {"params": {"u": "1", "v": "1", "w": "1"}, "generator": "B2", "expect": false},
        {"params": {"u": "1", "v": "1", "w": "1"}, "family": "B3",
         "values": {"a": "1", "c": "1", "g": "1"}, "expect": true},
        {"params": {"u": "1", "v": "2", "w": "1"}, "family": "B3",
         "values": {"a": "1", "c": "1", "g": "1"}, "expect": false},
        {"params": {"u": "0", "v": "0", "w": "2"}, "generator": "p245", "expect": true},
        {"params": {"u": "1", "v": "1", "w": "2"}, "generator": "p245", "expect": false},
        {"params": {"u": "2", "v": "3", "w": "5"}, "generator": "p245", "expect": false}
      ]
    }
  ]
}
)json";

}  // namespace liealg::detail
