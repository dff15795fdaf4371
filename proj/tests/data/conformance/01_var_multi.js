var a = 1, b, c = 'str';
