#pragma once

#include <vector>

// Round-trip corpus for the form-expression grammar, shared between the
// unit tests and the acceptance suite.
namespace qftest {

inline const std::vector<const char*>& expression_corpus() {
    static const std::vector<const char*> corpus = {
        "<1>",
        "<1,-1>",
        "<1,-1,1,1>",
        "<2,3,5,7>",
        "<-1,-1,-1>",
        "<1/2>",
        "<4/9,-8/27>",
        "<x>",
        "<-x>",
        "<2x>",
        "<x^2>",
        "<x^-1>",
        "<3x^-2>",
        "<1/2x>",
        "<2x,3y>",
        "<xy>",
        "<2x^2y^-3>",
        "pfister(2)",
        "pfister(2,x)",
        "pfister(-1,-1)",
        "pfister(x,y)",
        "pfister(1/2,3)",
        "hyp(1)",
        "hyp(2)",
        "hyp(7)",
        "<1> + <-1>",
        "<1,1> + <2,2>",
        "<1> + <2> + <3>",
        "<1,1>*<1,-1>",
        "<1,2>*<3>",
        "<1>*<1>*<1>",
        "2*<1,1>",
        "-1*<2>",
        "x*<1,1>",
        "2x*<1,1>",
        "1/2*<3,5>",
        "-3/4*<1>",
        "3x<1>",
        "5x<1,-1>",
        "2x pfister(2)",
        "3x hyp(1)",
        "2x 2*<1>",
        "3x(<1> + <2>)",
        "(<1> + <2>)*<1,1>",
        "<1,1>*(<1> + <-1>)",
        "2*(<1> + <2>)",
        "2*<1> + <3>",
        "<1> + 2*<3>",
        "<1,-1> + 2*<3>",
        "7x<1>",
        "pfister(2,x) + hyp(1)",
        "x*pfister(2)",
        "2*3*<1>",
        "3x 2x<1>",
        "(<1>)",
        "<1> + x*<1,1> + hyp(1)",
    };
    return corpus;
}

}  // namespace qftest
