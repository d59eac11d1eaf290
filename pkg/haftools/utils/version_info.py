version_info = {
    "name": "haftools",
    "version": "1.0.0",
    "build-version": "",
    "build": "-",
    "date": "-",
    "description": "Exact hafnians of two-parameter matrices and k-edge matching counts of arc diagrams.",
    "license": "None"
}
