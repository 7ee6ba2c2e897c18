# Virtual braids and Wada representations
