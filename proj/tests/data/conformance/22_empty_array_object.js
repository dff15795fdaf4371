var e = [], o = {};
