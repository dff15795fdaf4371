(function () { var hidden = 1; })();
