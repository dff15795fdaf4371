#!/usr/bin/env node
// Regenerates the ESTree JSON fixtures under tests/data from their .js
// sources. Usage: node gen_estree_fixtures.js <path-to-esprima> <dir>...
'use strict';

var fs = require('fs');
var path = require('path');

if (process.argv.length < 4) {
  console.error('usage: gen_estree_fixtures.js <esprima module path> <dir>...');
  process.exit(1);
}

var esprima = require(path.resolve(process.argv[2]));

process.argv.slice(3).forEach(function (dir) {
  fs.readdirSync(dir).filter(function (f) {
    return /\.js$/.test(f);
  }).sort().forEach(function (f) {
    var src = fs.readFileSync(path.join(dir, f), 'utf8');
    var ast = esprima.parse(src, { loc: true });
    var out = path.join(dir, f.replace(/\.js$/, '.json'));
    fs.writeFileSync(out, JSON.stringify(ast, null, 1) + '\n');
  });
});
