namespace fpanv {}  // placeholder
