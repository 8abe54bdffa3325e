#!/usr/bin/env node
// SMT-LIB 2 command-line front end for the z3-solver npm package (the
// official Z3 WebAssembly build). Reads one .smt2 file, prints the solver
// output (sat/unsat/unknown plus any model) on stdout.
//
//   usage: node z3smt2.js problem.smt2
//
// Resolves z3-solver from the local node_modules or the global npm root.

'use strict';
const fs = require('fs');
const path = require('path');

function resolveZ3() {
  try {
    return require('z3-solver');
  } catch (e) {}
  try {
    const root = require('child_process').execSync('npm root -g').toString().trim();
    return require(path.join(root, 'z3-solver'));
  } catch (e) {}
  process.stderr.write('z3smt2: cannot resolve the z3-solver package\n');
  process.exit(3);
}

async function main() {
  const file = process.argv[2];
  if (!file) {
    process.stderr.write('usage: z3smt2.js problem.smt2\n');
    process.exit(3);
  }
  const text = fs.readFileSync(file, 'utf8');
  const { init } = resolveZ3();
  const { Z3 } = await init();
  const cfg = Z3.mk_config();
  const ctx = Z3.mk_context(cfg);
  try {
    const out = await Z3.eval_smtlib2_string(ctx, text);
    process.stdout.write(out.endsWith('\n') ? out : out + '\n');
  } catch (err) {
    process.stderr.write('z3smt2: ' + String(err) + '\n');
    process.exit(2);
  }
  process.exit(0);
}

main();
