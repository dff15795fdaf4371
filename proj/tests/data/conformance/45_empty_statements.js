;;var a;;
