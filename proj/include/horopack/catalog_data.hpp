#pragma once

namespace horopack {

// Embedded catalog of the 23 noncompact Coxeter simplex tilings, stored as a
// versioned JSON document.  Coordinates and face forms are exact expression
// strings evaluated at load time; "ideal" flags mark light-cone vertices.
// Face forms are stored as printed sources and are re-scaled to unit inward
// normals by the loader, so individual sign conventions here are immaterial.
// "volume" is the closed-form or tabulated cell volume, "volume_exact" an
// optional higher-precision closed form, "density" the published optimum.
// "ratios" give the per-cusp share of the optimal packing in cusp order.
// "lattice_edges" list [child, index] pairs with vol(child) = index * vol(this).
inline constexpr const char* kCatalogJson = R"horo({
  "version": 1,
  "entries": [
    {
      "id": "V3",
      "witt": "V̄₃",
      "aliases": ["[3,3,6]", "[6,3,3]"],
      "class": "336",
      "schlafli_edges": [[0,1,3],[1,2,3],[2,3,6]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","1/2","0","0"],["1","1/2","sqrt(3)/6","0"]],
      "ideal": [true,false,false,false],
      "faces": [["0","0","0","1"],["1","-2","0","-1"],["0","-sqrt(3)/3","1","0"],["0","0","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"1/8","angle":"pi/3"},
      "density": {"kind":"closed","expr":"1/(2*sqrt(3)*lob(pi/3))"},
      "ratios": ["1"],
      "lattice_edges": [["DV3",5],["Y3",4],["P3",2],["Z3",6]]
    },
    {
      "id": "Y3",
      "witt": "Ȳ₃",
      "aliases": ["[3,6,3]"],
      "class": "336",
      "schlafli_edges": [[0,1,3],[1,2,6],[2,3,3]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","1/2","0","0"],["1","1/2","sqrt(3)/2","0"]],
      "ideal": [true,false,false,true],
      "faces": [["0","0","0","1"],["1","-2","0","-1"],["0","-sqrt(3)","1","0"],["0","0","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"1/2","angle":"pi/3"},
      "density": {"kind":"closed","expr":"1/(2*sqrt(3)*lob(pi/3))"},
      "ratios": ["3/4","1/4"],
      "lattice_edges": [["VV3",5],["VP3",3]]
    },
    {
      "id": "VP3",
      "witt": "V̄P₃",
      "aliases": ["[6,3^[3]]"],
      "class": "336",
      "schlafli_edges": [[0,1,6],[1,2,3],[1,3,3],[2,3,3]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","sqrt(3)/2","-1/2","0"],["1","sqrt(3)/2","1/2","0"]],
      "ideal": [true,false,true,true],
      "faces": [["0","0","0","1"],["1","-2*sqrt(3)/3","0","-1"],["0","-sqrt(3)/3","1","0"],["0","sqrt(3)/3","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"3/2","angle":"pi/3"},
      "density": {"kind":"closed","expr":"1/(2*sqrt(3)*lob(pi/3))"},
      "ratios": ["1/2","1/4","1/4"],
      "lattice_edges": [["PP3",2]]
    },
    {
      "id": "PP3",
      "witt": "P̂P₃",
      "aliases": ["[3^[3,3]]"],
      "class": "336",
      "schlafli_edges": [[0,1,3],[0,2,3],[0,3,3],[1,2,3],[1,3,3],[2,3,3]],
      "vertices": [["1","sqrt(3)/3","sqrt(3)/3","sqrt(3)/3"],["1","sqrt(3)/3","-sqrt(3)/3","-sqrt(3)/3"],["1","-sqrt(3)/3","sqrt(3)/3","-sqrt(3)/3"],["1","-sqrt(3)/3","-sqrt(3)/3","sqrt(3)/3"]],
      "ideal": [true,true,true,true],
      "faces": [["1/3","sqrt(3)/3","sqrt(3)/3","sqrt(3)/3"],["1/3","sqrt(3)/3","-sqrt(3)/3","-sqrt(3)/3"],["1/3","-sqrt(3)/3","sqrt(3)/3","-sqrt(3)/3"],["1/3","-sqrt(3)/3","-sqrt(3)/3","sqrt(3)/3"]],
      "volume": {"kind":"lobachevsky","coeff":"3","angle":"pi/3"},
      "density": {"kind":"closed","expr":"1/(2*sqrt(3)*lob(pi/3))"},
      "ratios": ["3/4","1/12","1/12","1/12"],
      "derived_coordinates": true,
      "lattice_edges": []
    },
    {
      "id": "P3",
      "witt": "P̄₃",
      "aliases": ["[3,3^[3]]"],
      "class": "336",
      "schlafli_edges": [[0,1,3],[1,2,3],[1,3,3],[2,3,3]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","1/2","-sqrt(3)/6","0"],["1","1/2","sqrt(3)/6","0"]],
      "ideal": [true,false,false,false],
      "faces": [["0","0","0","-1"],["1","-2","0","-1"],["0","-sqrt(3)/3","1","0"],["0","sqrt(3)/3","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"1/4","angle":"pi/3"},
      "density": {"kind":"closed","expr":"1/(2*sqrt(3)*lob(pi/3))"},
      "ratios": ["1"],
      "lattice_edges": []
    },
    {
      "id": "Z3",
      "witt": "Z̄₃",
      "aliases": ["[6,3,6]"],
      "class": "336",
      "schlafli_edges": [[0,2,6],[2,3,3],[1,3,6]],
      "vertices": [["1","0","0","1"],["1","0","0","-1"],["1","sqrt(3)/3","-1/3","1/3"],["1","sqrt(3)/3","1/3","-1/3"]],
      "ideal": [true,true,false,false],
      "faces": [["1","-sqrt(3)","1","1"],["1","-sqrt(3)","-1","-1"],["0","-sqrt(3)/3","1","0"],["0","sqrt(3)/3","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"3/4","angle":"pi/3"},
      "density": {"kind":"closed","expr":"1/(2*sqrt(3)*lob(pi/3))"},
      "ratios": ["1/2","1/2"],
      "lattice_edges": [["VP3",2]]
    },
    {
      "id": "BV3",
      "witt": "B̄V₃",
      "aliases": ["[4,3,6]", "[6,3,4]"],
      "class": "336",
      "schlafli_edges": [[0,1,4],[1,2,3],[2,3,6]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","sqrt(2)/2","0","0"],["1","sqrt(2)/2","sqrt(6)/6","0"]],
      "ideal": [true,false,false,false],
      "faces": [["0","0","0","1"],["1","-sqrt(2)","0","-1"],["0","-sqrt(12)/6","1","0"],["0","0","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"5/16","angle":"pi/3"},
      "density": {"kind":"closed","expr":"2/(5*sqrt(3)*lob(pi/3))"},
      "ratios": ["1"],
      "lattice_edges": [["BP3",2],["DV3",2]]
    },
    {
      "id": "BP3",
      "witt": "B̄P₃",
      "aliases": ["[4,3^[3]]"],
      "class": "336",
      "schlafli_edges": [[0,1,4],[1,2,3],[1,3,3],[2,3,3]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","sqrt(2)/2","-sqrt(6)/6","0"],["1","sqrt(2)/2","sqrt(6)/6","0"]],
      "ideal": [true,false,false,false],
      "faces": [["0","0","0","1"],["1","-sqrt(2)","0","-1"],["0","-sqrt(12)/6","1","0"],["0","sqrt(12)/6","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"5/8","angle":"pi/3"},
      "density": {"kind":"closed","expr":"2/(5*sqrt(3)*lob(pi/3))"},
      "ratios": ["1"],
      "lattice_edges": [["DP3",2]]
    },
    {
      "id": "DV3",
      "witt": "D̄V₃",
      "aliases": ["[4,3^[1,1]]"],
      "class": "336",
      "schlafli_edges": [[0,3,3],[1,3,3],[2,3,6]],
      "vertices": [["1","0","0","1"],["1","0","0","-1"],["1","sqrt(6)/3","0","0"],["1","sqrt(6)/4","sqrt(2)/4","0"]],
      "ideal": [true,true,false,false],
      "faces": [["1","-sqrt(6)/2","-sqrt(2)/2","1"],["1","-sqrt(6)/2","-sqrt(2)/2","-1"],["0","-sqrt(3)/3","1","0"],["0","0","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"5/8","angle":"pi/3"},
      "density": {"kind":"closed","expr":"1/(2*sqrt(3)*lob(pi/3))"},
      "ratios": ["4/5","1/5"],
      "lattice_edges": [["DP3",2],["VV3",4]]
    },
    {
      "id": "DP3",
      "witt": "D̄P₃",
      "aliases": ["[3^[]x[]]"],
      "class": "336",
      "schlafli_edges": [[0,2,3],[0,3,3],[1,2,3],[1,3,3],[2,3,3]],
      "vertices": [["1","0","0","1"],["1","0","0","-1"],["1","sqrt(2)/2","sqrt(6)/6","0"],["1","sqrt(2)/2","-sqrt(6)/6","0"]],
      "ideal": [true,true,false,false],
      "faces": [["1","-sqrt(2)","0","1"],["1","-sqrt(2)","0","-1"],["0","sqrt(12)/6","1","0"],["0","-sqrt(12)/6","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"5/4","angle":"pi/3"},
      "density": {"kind":"closed","expr":"1/(2*sqrt(3)*lob(pi/3))"},
      "ratios": ["4/5","1/5"],
      "lattice_edges": []
    },
    {
      "id": "VV3",
      "witt": "V̂V₃",
      "aliases": ["[(3,6)^[2]]", "[(3,6,3,6)]"],
      "class": "336",
      "schlafli_edges": [[0,2,6],[0,3,3],[1,2,3],[1,3,6]],
      "vertices": [["1","0","0","1"],["1","0","0","-1"],["1","sqrt(4*sqrt(3)-6)","0","2-sqrt(3)"],["1","0","sqrt(4*sqrt(3)-6)","sqrt(3)-2"]],
      "ideal": [true,true,true,true],
      "faces": [["1","-sqrt(sqrt(3))","-1/sqrt(sqrt(3))","1"],["1","-1/sqrt(sqrt(3))","-sqrt(sqrt(3))","-1"],["0","1","0","0"],["0","0","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"5/2","angle":"pi/3"},
      "density": {"kind":"closed","expr":"2/(5*sqrt(3)*lob(pi/3))"},
      "flag_on_mismatch": true,
      "lattice_edges": []
    },
    {
      "id": "R3",
      "witt": "R̄₃",
      "aliases": ["[3,4,4]", "[4,4,3]"],
      "class": "344",
      "schlafli_edges": [[0,2,3],[1,2,4],[1,3,4]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","0","sqrt(3)/4","1/4"],["1","sqrt(3)/3","0","0"]],
      "ideal": [true,false,false,false],
      "faces": [["0","0","-1/sqrt(3)","1"],["1","-sqrt(3)","-sqrt(3)","-1"],["0","0","1","0"],["0","1","0","0"]],
      "volume": {"kind":"lobachevsky","coeff":"1/6","angle":"pi/4"},
      "density": {"kind":"closed","expr":"3/(4*catalan)"},
      "ratios": ["1"],
      "lattice_edges": [["O3",2],["N3",3]]
    },
    {
      "id": "O3",
      "witt": "Ō₃",
      "aliases": ["[3,4^1,1]"],
      "class": "344",
      "schlafli_edges": [[0,1,3],[1,2,4],[1,3,4]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","1/2","-1/2","0"],["1","1/2","1/2","0"]],
      "ideal": [true,false,false,false],
      "faces": [["0","0","0","1"],["1","-2","0","-1"],["0","-1","1","0"],["0","1","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"1/3","angle":"pi/4"},
      "density": {"kind":"closed","expr":"3/(4*catalan)"},
      "ratios": ["1"],
      "lattice_edges": [["BR3",2]]
    },
    {
      "id": "BR3",
      "witt": "B̂R₃",
      "aliases": ["[(3^2,4^2)]", "[(3,3,4,4)]"],
      "class": "344",
      "schlafli_edges": [[0,2,3],[0,3,3],[1,2,4],[1,3,4]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","0","sqrt(2)/2","1/2"],["1","sqrt(2)/2","0","1/2"]],
      "ideal": [true,false,false,false],
      "faces": [["0","-sqrt(2)/2","-sqrt(2)/2","1"],["1","-sqrt(2)/2","-sqrt(2)/2","-1"],["0","0","1","0"],["0","1","0","0"]],
      "volume": {"kind":"lobachevsky","coeff":"2/3","angle":"pi/4"},
      "density": {"kind":"closed","expr":"3/(4*catalan)"},
      "ratios": ["1"],
      "lattice_edges": []
    },
    {
      "id": "N3",
      "witt": "N̄₃",
      "aliases": ["[4,4,4]"],
      "class": "344",
      "schlafli_edges": [[0,1,4],[1,2,4],[2,3,4]],
      "vertices": [["1","0","0","1"],["1","sqrt(sqrt(2)-1)","-sqrt(5*sqrt(2)-7)","3-2*sqrt(2)"],["1","sqrt(sqrt(2)-1)","sqrt(5*sqrt(2)-7)","2*sqrt(2)-3"],["1","0","0","-1"]],
      "ideal": [true,false,false,true],
      "faces": [["1","-sqrt(sqrt(2)+1)","sqrt(sqrt(2)-1)","1"],["0","1-sqrt(2)","1","0"],["0","sqrt(2)-1","1","0"],["1","-sqrt(sqrt(2)+1)","-sqrt(sqrt(2)-1)","-1"]],
      "volume": {"kind":"lobachevsky","coeff":"1/2","angle":"pi/4"},
      "density": {"kind":"closed","expr":"3/(4*catalan)"},
      "ratios": ["2/3","1/3"],
      "lattice_edges": [["M3",2]]
    },
    {
      "id": "M3",
      "witt": "M̄₃",
      "aliases": ["[4^1,1,1]"],
      "class": "344",
      "schlafli_edges": [[0,1,4],[1,2,4],[1,3,4]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","sqrt(2)/2","-sqrt(2)/2","0"],["1","sqrt(2)/2","sqrt(2)/2","0"]],
      "ideal": [true,false,true,true],
      "faces": [["0","0","0","1"],["1","-sqrt(2)","0","-1"],["0","-1","1","0"],["0","1","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"1","angle":"pi/4"},
      "density": {"kind":"closed","expr":"3/(4*catalan)"},
      "ratios": ["2/3","1/6","1/6"],
      "lattice_edges": [["RR3",2]]
    },
    {
      "id": "RR3",
      "witt": "R̂R₃",
      "aliases": ["[4^[4]]", "[(4,4,4,4)]"],
      "class": "344",
      "schlafli_edges": [[0,1,4],[0,3,4],[1,2,4],[2,3,4]],
      "vertices": [["1","0","0","1"],["1","1","0","0"],["1","0","0","-1"],["1","0","1","0"]],
      "ideal": [true,true,true,true],
      "faces": [["1","-1","-1","1"],["0","1","0","0"],["1","-1","-1","-1"],["0","0","1","0"]],
      "volume": {"kind":"lobachevsky","coeff":"2","angle":"pi/4"},
      "density": {"kind":"closed","expr":"3/(4*catalan)"},
      "ratios": ["2/3","1/12","1/6","1/12"],
      "lattice_edges": []
    },
    {
      "id": "HV3",
      "witt": "H̄V₃",
      "aliases": ["[5,3,6]", "[6,3,5]"],
      "class": "536",
      "schlafli_edges": [[0,1,5],[1,2,3],[2,3,6]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","(sqrt(5)+1)/4","0","0"],["1","(sqrt(5)+1)/4","sqrt((sqrt(5)+3)/6)/2","0"]],
      "ideal": [true,false,false,false],
      "faces": [["0","0","0","1"],["1","1-sqrt(5)","0","-1"],["0","-1/sqrt(3)","1","0"],["0","0","1","0"]],
      "volume": {"kind":"numeric","value":"0.17150"},
      "volume_exact": "lob(pi/3)/2 + lob(11*pi/30)/4 - lob(pi/30)/4",
      "density": {"kind":"numeric","value":"0.550841"},
      "ratios": ["1"],
      "lattice_edges": [["HP3",2]]
    },
    {
      "id": "HP3",
      "witt": "H̄P₃",
      "aliases": ["[5,3^[3]]"],
      "class": "536",
      "schlafli_edges": [[0,1,5],[1,2,3],[1,3,3],[2,3,3]],
      "vertices": [["1","0","0","1"],["1","0","0","0"],["1","(sqrt(5)+1)/4","-sqrt((sqrt(5)+3)/6)/2","0"],["1","(sqrt(5)+1)/4","sqrt((sqrt(5)+3)/6)/2","0"]],
      "ideal": [true,false,false,false],
      "faces": [["0","0","0","1"],["1","1-sqrt(5)","0","-1"],["0","-sqrt(3)/3","1","0"],["0","sqrt(3)/3","1","0"]],
      "volume": {"kind":"numeric","value":"0.34300"},
      "volume_exact": "lob(pi/3) + lob(11*pi/30)/2 - lob(pi/30)/2",
      "density": {"kind":"numeric","value":"0.550841"},
      "ratios": ["1"],
      "lattice_edges": []
    },
    {
      "id": "AV3",
      "witt": "ÂV₃",
      "aliases": ["[(3^3,6)]", "[(3,3,3,6)]"],
      "class": "other",
      "schlafli_edges": [[0,1,3],[0,2,3],[1,3,3],[2,3,6]],
      "vertices": [["1","0","0","1"],["1","0","-1","0"],["1","0","sqrt(3)/3","0"],["1","(sqrt(3)+1)/4","(sqrt(3)-1)/4","0"]],
      "ideal": [true,true,false,false],
      "faces": [["0","0","0","1"],["1","-1","-sqrt(3)","-1"],["1","-sqrt(3)","1","-1"],["0","1","0","0"]],
      "volume": {"kind":"numeric","value":"0.364107"},
      "volume_exact": "lob(pi/3)/8 + lob(pi/4)/6 + lob(pi/4)/6 + lob(pi/3)/2",
      "density": {"kind":"numeric","value":"0.838825"},
      "ratios": ["(2*sqrt(3)+8)/13","(5-2*sqrt(3))/13"],
      "lattice_edges": []
    },
    {
      "id": "BV3c",
      "witt": "B̂V₃",
      "aliases": ["[(3,4,3,6)]"],
      "class": "other",
      "schlafli_edges": [[0,1,4],[0,2,3],[1,3,3],[2,3,6]],
      "vertices": [["1","0","0","1"],["1","0","-1","0"],["1","0","sqrt(6)/3","0"],["1","(sqrt(2)+sqrt(3))/4","(sqrt(6)-1)/4","0"]],
      "ideal": [true,true,false,false],
      "faces": [["0","0","0","1"],["1","-1/sqrt(2)","-3/sqrt(6)","-1"],["1","-sqrt(3)","1","-1"],["0","1","0","0"]],
      "volume": {"kind":"numeric","value":"0.525840"},
      "density": {"kind":"numeric","value":"0.747914"},
      "ratios": ["(sqrt(5*sqrt(2/3)+49/12)/8)/(sqrt(5*sqrt(2/3)+49/12)/8+1/(16*sqrt(3)))","(1/(16*sqrt(3)))/(sqrt(5*sqrt(2/3)+49/12)/8+1/(16*sqrt(3)))"],
      "lattice_edges": []
    },
    {
      "id": "HV3c",
      "witt": "ĤV₃",
      "aliases": ["[(3,5,3,6)]"],
      "class": "other",
      "schlafli_edges": [[0,1,5],[0,2,3],[1,3,3],[2,3,6]],
      "vertices": [["1","0","0","1"],["1","0","-1","0"],["1","0","sqrt((sqrt(5)+3)/6)","0"],["1","(2*sqrt(3)+sqrt(5)+1)/8","(sqrt(6*(sqrt(5)+3))-2)/8","0"]],
      "ideal": [true,true,false,false],
      "faces": [["0","0","0","1"],["1","(1-sqrt(5))/2","sqrt(3)*(1-sqrt(5))/2","-1"],["1","-sqrt(3)","1","-1"],["0","1","0","0"]],
      "volume": {"kind":"numeric","value":"0.672985"},
      "density": {"kind":"numeric","value":"0.655381"},
      "ratios": ["((9*sqrt(3)+6*sqrt(5)+sqrt(15)+6)/96)/((9*sqrt(3)+6*sqrt(5)+sqrt(15)+6)/96+1/(16*sqrt(3)))","(1/(16*sqrt(3)))/((9*sqrt(3)+6*sqrt(5)+sqrt(15)+6)/96+1/(16*sqrt(3)))"],
      "lattice_edges": []
    },
    {
      "id": "CR3",
      "witt": "ĈR₃",
      "aliases": ["[(3,4^3)]", "[(3,4,4,4)]"],
      "class": "other",
      "schlafli_edges": [[0,1,3],[0,2,4],[1,3,4],[2,3,4]],
      "vertices": [["1","0","0","1"],["1","0","-1","0"],["1","0","sqrt(2)/2","0"],["1","sqrt(2)/4+1/2","sqrt(2)/4-1/2","0"]],
      "ideal": [true,true,false,false],
      "faces": [["0","0","0","1"],["1","-sqrt(2)","-sqrt(2)","-1"],["1","-1","1","-1"],["0","1","0","0"]],
      "volume": {"kind":"numeric","value":"0.556282"},
      "density": {"kind":"numeric","value":"0.767195"},
      "ratios": ["(2+sqrt(2))/4","(2-sqrt(2))/4"],
      "lattice_edges": []
    }
  ]
})horo";

}  // namespace horopack
