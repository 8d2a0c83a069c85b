namespace hyp3 {
}
